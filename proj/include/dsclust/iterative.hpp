#pragma once

// Greedy best-improvement hill climbing over partitions by single-evidence
// transfers. Each move picks, over every (evidence, target cluster) pair,
// the strictly improving transfer with the smallest resulting Mcf.

#include <optional>

#include "dsclust/partition.hpp"

namespace dsclust {

struct MoveStep {
    int iteration = 0;  // 1-based move number
    int evidence_id = 0;
    int from_cluster = 0;
    int to_cluster = 0;
    double mcf_after = 0.0;
};

struct MoveTrace {
    double initial_mcf = 0.0;
    std::vector<MoveStep> steps;
    // True when the move budget ran out while a favorable transfer still
    // existed; the returned partition is then not certified locally optimal.
    bool budget_exhausted = false;
};

// Full scan of all single-evidence transfers. Returns the favorable delta
// with minimal Mcf*, or nullopt when no transfer strictly improves. Ties
// break to the lowest evidence id, then the lowest target cluster.
std::optional<TransferDelta> best_move(const Partition& p,
                                       std::span<const SimpleEvidence> evidence);

inline int default_move_budget(int n_evidence, int r) { return 10 * n_evidence * r; }

// Applies best moves until none is favorable or the budget is spent.
// max_moves < 0 selects the default budget.
std::pair<Partition, MoveTrace> optimize(Partition p, std::span<const SimpleEvidence> evidence,
                                         int max_moves = -1);

}  // namespace dsclust
