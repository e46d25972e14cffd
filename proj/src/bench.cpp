#include "dsclust/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace dsclust {

namespace {

// Substream lanes. Methods use their enum value; the generator gets its
// own lane so adding a method never perturbs the instances.
constexpr std::uint64_t kGeneratorLane = 1000;

constexpr double kMassLo = 0.01;
constexpr double kMassHi = 0.99;

}  // namespace

Family parse_family(const std::string& name) {
    if (name == "exhaustive") return Family::exhaustive;
    if (name == "random") return Family::random_subsets;
    throw Error("unknown family: " + name);
}

std::string family_name(Family f) {
    return f == Family::exhaustive ? "exhaustive" : "random";
}

ProblemSpec make_spec(Family family, int r, int n_evidence, int frame_size,
                      std::uint64_t seed) {
    ProblemSpec spec{family, r, n_evidence, frame_size, seed};
    if (family == Family::exhaustive) {
        if (r < 2 || r > 8) throw BadSize("exhaustive family supports 2 <= r <= 8");
        spec.frame_size = r;
        spec.n_evidence = (1 << r) - 1;
    } else {
        if (frame_size < 2) throw BadSize("random family needs frame_size >= 2");
        if (frame_size > Frame::kMaxSize) throw BadSize("frame_size exceeds the frame cap");
        if (n_evidence < 1) throw BadSize("random family needs at least one evidence");
        if (r < 1) throw BadSize("need at least one cluster");
    }
    return spec;
}

EvidenceList gen_exhaustive(int r, Rng& rng) {
    if (r < 2 || r > 8) throw BadSize("exhaustive family supports 2 <= r <= 8");
    EvidenceList out;
    out.reserve((1u << r) - 1);
    for (std::uint32_t bits = 1; bits < (1u << r); ++bits) {
        const double mass = rng.uniform(kMassLo, kMassHi);
        out.push_back(make_evidence(FocalSet(bits), mass, static_cast<int>(bits) - 1));
    }
    return out;
}

EvidenceList gen_random(int frame_size, int m, Rng& rng) {
    if (frame_size < 2 || frame_size > Frame::kMaxSize)
        throw BadSize("random family needs 2 <= frame_size <= " + std::to_string(Frame::kMaxSize));
    if (m < 1) throw BadSize("need at least one evidence");
    const std::uint32_t n_subsets = (1u << frame_size) - 1;
    EvidenceList out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) {
        const FocalSet focal(1u + rng.below(n_subsets));  // uniform over nonempty subsets
        const double mass = rng.uniform(kMassLo, kMassHi);
        out.push_back(make_evidence(focal, mass, i));
    }
    return out;
}

EvidenceList generate_instance(const ProblemSpec& spec, int repeat) {
    Rng rng = Rng::substream(spec.seed, static_cast<std::uint64_t>(repeat), kGeneratorLane);
    if (spec.family == Family::exhaustive) return gen_exhaustive(spec.n_clusters, rng);
    return gen_random(spec.frame_size, spec.n_evidence, rng);
}

std::vector<MethodAggregate> aggregate_runs(const ExperimentReport& report) {
    std::vector<Method> methods;
    for (const RunReport& run : report.runs)
        if (std::find(methods.begin(), methods.end(), run.method) == methods.end())
            methods.push_back(run.method);
    std::sort(methods.begin(), methods.end(),
              [](Method a, Method b) { return static_cast<int>(a) < static_cast<int>(b); });

    std::vector<MethodAggregate> aggregates;
    for (Method m : methods) {
        MethodAggregate agg;
        agg.method = m;
        agg.best_mcf = std::numeric_limits<double>::infinity();
        double sum_mcf = 0, sum_cc = 0, sum_ce = 0;
        double sum_ni = 0, sum_ni2 = 0, sum_im = 0, sum_im2 = 0, sum_wt = 0;
        for (const RunReport& run : report.runs) {
            if (run.method != m) continue;
            ++agg.runs;
            agg.best_mcf = std::min(agg.best_mcf, run.final_mcf);
            sum_mcf += run.final_mcf;
            double conflict_sum = 0;
            for (double c : run.final_partition.conflicts) conflict_sum += c;
            sum_cc += conflict_sum / run.final_partition.r;
            sum_ce += conflict_sum / static_cast<double>(run.final_partition.assignment.size());
            sum_ni += run.neural_iterations;
            sum_ni2 += static_cast<double>(run.neural_iterations) * run.neural_iterations;
            sum_im += run.iterative_moves;
            sum_im2 += static_cast<double>(run.iterative_moves) * run.iterative_moves;
            sum_wt += run.wall_time;
        }
        if (agg.runs == 0) continue;
        const double n = agg.runs;
        agg.mean_mcf = sum_mcf / n;
        agg.mean_conflict_per_cluster = sum_cc / n;
        agg.mean_conflict_per_evidence = sum_ce / n;
        agg.mean_neural_iterations = sum_ni / n;
        agg.sd_neural_iterations = std::sqrt(std::max(0.0, sum_ni2 / n - (sum_ni / n) * (sum_ni / n)));
        agg.mean_iterative_moves = sum_im / n;
        agg.sd_iterative_moves = std::sqrt(std::max(0.0, sum_im2 / n - (sum_im / n) * (sum_im / n)));
        agg.mean_wall_time = sum_wt / n;
        aggregates.push_back(agg);
    }
    return aggregates;
}

ExperimentReport run_experiment(const ProblemSpec& spec, const std::vector<Method>& methods,
                                int repeats, const NetworkParams& params, int jobs,
                                bool record_trace) {
    if (repeats < 1) throw BadSize("repeats must be >= 1");
    validate_params(params);

    ExperimentReport report;
    report.spec = spec;
    report.repeats = repeats;

    // Instances up front; each cell then only reads shared data.
    std::vector<EvidenceList> instances;
    instances.reserve(repeats);
    for (int rep = 0; rep < repeats; ++rep) instances.push_back(generate_instance(spec, rep));

    // Canonical (repeat, method) cell order regardless of how the method
    // set was passed in.
    std::vector<Method> ordered = methods;
    std::sort(ordered.begin(), ordered.end(),
              [](Method a, Method b) { return static_cast<int>(a) < static_cast<int>(b); });
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

    struct Cell {
        int repeat;
        Method method;
    };
    std::vector<Cell> cells;
    for (int rep = 0; rep < repeats; ++rep)
        for (Method m : ordered) cells.push_back({rep, m});

    std::vector<RunReport> slots(cells.size());
    std::vector<std::string> failures(cells.size());

    auto run_cell = [&](std::size_t idx) {
        const Cell& cell = cells[idx];
        try {
            Rng rng = Rng::substream(spec.seed, static_cast<std::uint64_t>(cell.repeat),
                                     static_cast<std::uint64_t>(cell.method));
            RunReport run = run_single(cell.method, instances[cell.repeat], spec.n_clusters,
                                       params, rng, record_trace);
            run.seed = spec.seed;
            run.problem = {family_name(spec.family), spec.frame_size,
                           static_cast<int>(instances[cell.repeat].size()), spec.n_clusters};
            slots[idx] = std::move(run);
        } catch (const std::exception& e) {
            failures[idx] = e.what();
        }
    };

    if (jobs <= 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                run_cell(i);
        };
        std::vector<std::thread> pool;
        const int n_threads = std::min<int>(jobs, static_cast<int>(cells.size()));
        pool.reserve(n_threads);
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!failures[i].empty())
            report.errors.push_back({cells[i].repeat, cells[i].method, failures[i]});
        else
            report.runs.push_back(std::move(slots[i]));
    }
    report.aggregates = aggregate_runs(report);
    return report;
}

}  // namespace dsclust
