#pragma once

// Runs neural relaxation to convergence, decodes the voltages into a
// partition, and warm-starts the iterative optimizer from it. Also the
// uniform entry point for running any one of the three methods.

#include <cstdint>
#include <string>

#include "dsclust/iterative.hpp"
#include "dsclust/neural.hpp"

namespace dsclust {

enum class Method { neural = 0, iterative = 1, hybrid = 2 };

Method parse_method(const std::string& name);  // throws UnknownMethod
std::string method_name(Method m);

enum class Phase { neural, iterative };

std::string phase_name(Phase p);

struct TracePoint {
    Phase phase;
    int iteration;  // contiguous across phases within one run
    double mcf;
};

struct ProblemDescriptor {
    std::string source;  // file path or generator family
    int frame_size = 0;
    int n_evidence = 0;
    int r = 0;
};

struct RunReport {
    Method method = Method::neural;
    std::uint64_t seed = 0;
    ProblemDescriptor problem;
    double final_mcf = 0.0;
    Partition final_partition;
    int neural_iterations = 0;
    int iterative_moves = 0;
    std::vector<TracePoint> mcf_trace;  // hard-decode Mcf per neural iteration, then per move
    MoveTrace moves;                    // iterative-phase move records
    double wall_time = 0.0;             // seconds; kept out of serialized documents
    bool neural_converged = false;
    bool iterative_converged = false;   // ended by absence of a favorable move
    double neural_decode_mcf = 0.0;     // Mcf of the decoded neural state (hand-off point)
    double neural_crispness = 0.0;
};

// Neural phase to convergence, argmax decode (crisp or not), then the
// iterative optimizer from the decoded partition. When record_trace is
// set, the trace carries the hard-decode Mcf of every neural iteration;
// move entries are always recorded.
RunReport run_hybrid(std::span<const SimpleEvidence> evidence, int r,
                     const NetworkParams& params, Rng& rng, bool record_trace = true);

// method = neural: decode of the converged network is the result.
// method = iterative: cold start from a uniform-random assignment.
// method = hybrid: run_hybrid.
RunReport run_single(Method method, std::span<const SimpleEvidence> evidence, int r,
                     const NetworkParams& params, Rng& rng, bool record_trace = true);

}  // namespace dsclust
