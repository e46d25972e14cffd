#include "dsclust/iterative.hpp"

namespace dsclust {

std::optional<TransferDelta> best_move(const Partition& p,
                                       std::span<const SimpleEvidence> evidence) {
    std::optional<TransferDelta> best;
    for (int q = 0; q < static_cast<int>(evidence.size()); ++q) {
        for (int k = 0; k < p.r; ++k) {
            if (k == p.assignment[q]) continue;
            TransferDelta d = evaluate_transfer(p, evidence, q, k);
            if (!d.favorable) continue;
            if (!best || d.new_mcf < best->new_mcf) best = d;
        }
    }
    return best;
}

std::pair<Partition, MoveTrace> optimize(Partition p, std::span<const SimpleEvidence> evidence,
                                         int max_moves) {
    if (max_moves < 0)
        max_moves = default_move_budget(static_cast<int>(evidence.size()), p.r);

    MoveTrace trace;
    trace.initial_mcf = metaconflict(p);

    int moves = 0;
    while (moves < max_moves) {
        std::optional<TransferDelta> d = best_move(p, evidence);
        if (!d) return {std::move(p), std::move(trace)};  // local minimum
        apply_transfer(p, *d);
        ++moves;
        trace.steps.push_back(
            {moves, d->evidence_id, d->from_cluster, d->to_cluster, d->new_mcf});
    }
    trace.budget_exhausted = best_move(p, evidence).has_value();
    return {std::move(p), std::move(trace)};
}

}  // namespace dsclust
