#pragma once

// Problem generators for the two benchmark families and the seeded
// experiment harness that runs the three methods on paired instances and
// aggregates the table statistics.

#include "dsclust/hybrid.hpp"

namespace dsclust {

enum class Family { exhaustive, random_subsets };

Family parse_family(const std::string& name);  // "exhaustive" | "random"
std::string family_name(Family f);

struct ProblemSpec {
    Family family = Family::exhaustive;
    int n_clusters = 0;   // r
    int n_evidence = 0;   // M; the exhaustive family forces M = 2^r - 1
    int frame_size = 0;   // the exhaustive family forces frame_size = r
    std::uint64_t seed = 0;
};

// Normalizes derived fields and checks bounds.
ProblemSpec make_spec(Family family, int r, int n_evidence, int frame_size, std::uint64_t seed);

// One piece of evidence per nonempty subset of {1..r}, ascending by
// bitmask, masses i.i.d. uniform on (0.01, 0.99). 2 <= r <= 8.
EvidenceList gen_exhaustive(int r, Rng& rng);

// M focal sets uniform over the nonempty subsets of the frame (repetition
// allowed), masses uniform on (0.01, 0.99).
EvidenceList gen_random(int frame_size, int m, Rng& rng);

// Instance for one repeat of an experiment; derived from (spec.seed, repeat)
// so every method sees the same evidence.
EvidenceList generate_instance(const ProblemSpec& spec, int repeat);

struct MethodAggregate {
    Method method = Method::neural;
    int runs = 0;
    double best_mcf = 0.0;                  // best of k
    double mean_mcf = 0.0;
    double mean_conflict_per_cluster = 0.0;   // mean over runs of (sum_i c_i) / r
    double mean_conflict_per_evidence = 0.0;  // mean over runs of (sum_i c_i) / M
    double mean_neural_iterations = 0.0;
    double sd_neural_iterations = 0.0;
    double mean_iterative_moves = 0.0;      // for hybrid this is the delta-iterations
    double sd_iterative_moves = 0.0;
    double mean_wall_time = 0.0;            // seconds; kept out of serialized documents
};

struct CellError {
    int repeat = 0;
    Method method = Method::neural;
    std::string message;
};

struct ExperimentReport {
    ProblemSpec spec;
    int repeats = 0;
    std::vector<MethodAggregate> aggregates;  // in method enum order
    std::vector<RunReport> runs;              // raw logs, sorted by (repeat, method)
    std::vector<CellError> errors;            // failed cells, recorded not fatal
};

// Runs every requested method on the same fresh instance per repeat.
// Cells may execute concurrently (jobs > 1); results are identical to the
// sequential order because every cell draws from its own substream.
ExperimentReport run_experiment(const ProblemSpec& spec, const std::vector<Method>& methods,
                                int repeats, const NetworkParams& params, int jobs = 1,
                                bool record_trace = false);

// Recomputes the per-method aggregates from the raw runs.
std::vector<MethodAggregate> aggregate_runs(const ExperimentReport& report);

}  // namespace dsclust
