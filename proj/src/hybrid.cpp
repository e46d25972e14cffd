#include "dsclust/hybrid.hpp"

#include <chrono>

namespace dsclust {

Method parse_method(const std::string& name) {
    if (name == "neural") return Method::neural;
    if (name == "iterative") return Method::iterative;
    if (name == "hybrid") return Method::hybrid;
    throw UnknownMethod(name);
}

std::string method_name(Method m) {
    switch (m) {
        case Method::neural: return "neural";
        case Method::iterative: return "iterative";
        case Method::hybrid: return "hybrid";
    }
    throw UnknownMethod("<invalid enum>");
}

std::string phase_name(Phase p) {
    return p == Phase::neural ? "neural" : "iterative";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Mcf of the hard decode of a network state.
double decoded_mcf(const NetworkState& state, std::span<const SimpleEvidence> evidence, int r) {
    Partition p = make_partition(decode(state).assignment, r, evidence);
    return metaconflict(p);
}

void append_move_points(RunReport& report, int offset) {
    for (const MoveStep& s : report.moves.steps)
        report.mcf_trace.push_back({Phase::iterative, offset + s.iteration, s.mcf_after});
}

RunReport run_neural_phase(std::span<const SimpleEvidence> evidence, int r,
                           const NetworkParams& params, Rng& rng, bool record_trace) {
    RunReport report;
    const ConflictMatrix matrix = build_network(evidence);
    NetworkState state = init_state(static_cast<int>(evidence.size()), r, params, rng);

    std::function<void(const NetworkState&)> on_iteration;
    if (record_trace) {
        on_iteration = [&](const NetworkState& s) {
            report.mcf_trace.push_back({Phase::neural, s.t, decoded_mcf(s, evidence, r)});
        };
    }
    RelaxationResult relax = run_to_convergence(std::move(state), matrix, params, on_iteration);

    report.neural_iterations = relax.iterations;
    report.neural_converged = relax.converged;

    DecodeResult dec = decode(relax.state);
    report.neural_crispness = dec.crispness;
    report.final_partition = make_partition(std::move(dec.assignment), r, evidence);
    report.final_mcf = metaconflict(report.final_partition);
    report.neural_decode_mcf = report.final_mcf;
    return report;
}

}  // namespace

RunReport run_hybrid(std::span<const SimpleEvidence> evidence, int r,
                     const NetworkParams& params, Rng& rng, bool record_trace) {
    const auto start = Clock::now();
    RunReport report = run_neural_phase(evidence, r, params, rng, record_trace);
    report.method = Method::hybrid;

    auto [optimized, trace] = optimize(std::move(report.final_partition), evidence);
    report.final_partition = std::move(optimized);
    report.moves = std::move(trace);
    report.iterative_moves = static_cast<int>(report.moves.steps.size());
    report.iterative_converged = !report.moves.budget_exhausted;
    report.final_mcf = metaconflict(report.final_partition);
    append_move_points(report, report.neural_iterations);

    report.wall_time = seconds_since(start);
    return report;
}

RunReport run_single(Method method, std::span<const SimpleEvidence> evidence, int r,
                     const NetworkParams& params, Rng& rng, bool record_trace) {
    const auto start = Clock::now();
    switch (method) {
        case Method::hybrid: {
            RunReport report = run_hybrid(evidence, r, params, rng, record_trace);
            report.wall_time = seconds_since(start);
            return report;
        }
        case Method::neural: {
            RunReport report = run_neural_phase(evidence, r, params, rng, record_trace);
            report.method = Method::neural;
            report.moves.initial_mcf = report.final_mcf;
            report.iterative_converged = true;  // no iterative phase to exhaust
            report.wall_time = seconds_since(start);
            return report;
        }
        case Method::iterative: {
            RunReport report;
            report.method = Method::iterative;
            std::vector<int> assignment(evidence.size());
            for (int& a : assignment) a = static_cast<int>(rng.below(static_cast<std::uint32_t>(r)));
            Partition p = make_partition(std::move(assignment), r, evidence);

            auto [optimized, trace] = optimize(std::move(p), evidence);
            report.final_partition = std::move(optimized);
            report.moves = std::move(trace);
            report.iterative_moves = static_cast<int>(report.moves.steps.size());
            report.iterative_converged = !report.moves.budget_exhausted;
            report.final_mcf = metaconflict(report.final_partition);
            append_move_points(report, 0);
            report.wall_time = seconds_since(start);
            return report;
        }
    }
    throw UnknownMethod("<invalid enum>");
}

}  // namespace dsclust
