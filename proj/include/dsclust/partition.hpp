#pragma once

// Partitions of an evidence set into r clusters and the metaconflict
// criterion Mcf = 1 - (1-c0) * prod_i (1-c_i) evaluated over the cached
// per-cluster conflicts.

#include <span>
#include <utility>
#include <vector>

#include "dsclust/evidence.hpp"

namespace dsclust {

// Transfers count as improvements only past this margin, so float noise
// cannot cycle the optimizer.
inline constexpr double kImprovementTol = 1e-12;

struct Partition {
    std::vector<int> assignment;    // evidence id -> cluster in [0, r)
    int r = 0;                      // number of clusters; empty clusters allowed
    std::vector<double> conflicts;  // cached per-cluster conflicts, size r
    double domain_conflict = 0.0;   // c0, constant 0 in all shipped experiments

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.assignment == b.assignment && a.r == b.r &&
               a.domain_conflict == b.domain_conflict;
    }
};

// Builds a partition and fills the conflict cache from scratch.
Partition make_partition(std::vector<int> assignment, int r,
                         std::span<const SimpleEvidence> evidence,
                         double domain_conflict = 0.0);

// Conflict of one cluster recomputed from its members.
double cluster_conflict(const Partition& p, std::span<const SimpleEvidence> evidence,
                        int cluster);

// Recomputes every cached conflict from scratch.
void refresh_conflicts(Partition& p, std::span<const SimpleEvidence> evidence);

// Mcf = 1 - (1-c0) * prod_i (1-c_i).
double metaconflict(const Partition& p);

// Additive reformulation sum_i -log(1-c_i); requires c0 = 0. Minimizing it
// is the same as minimizing Mcf (monotone bijection Mcf = 1 - exp(-sum)).
double log_sum_objective(const Partition& p);

// Consequence of moving one piece of evidence to another cluster. Both
// affected clusters are recombined from scratch; there is no decombination.
struct TransferDelta {
    int evidence_id = 0;
    int from_cluster = 0;
    int to_cluster = 0;
    double new_from_conflict = 0.0;  // c_i* (source without the evidence)
    double new_to_conflict = 0.0;    // c_j* (target with the evidence)
    double new_mcf = 0.0;            // Mcf*
    bool favorable = false;          // Mcf* < Mcf - kImprovementTol
};

TransferDelta evaluate_transfer(const Partition& p, std::span<const SimpleEvidence> evidence,
                                int evidence_id, int target_cluster);

// Applies an evaluated transfer, updating the assignment and the two
// affected cache entries.
void apply_transfer(Partition& p, const TransferDelta& d);

// Exhaustive minimum over all r^N assignments; r^N <= 1e7. Ties resolve to
// the lexicographically smallest assignment. Subtrees whose partial Mcf
// already reaches the best known value are skipped, which is sound because
// adding evidence never lowers a cluster conflict.
std::pair<Partition, double> brute_force_min_mcf(std::span<const SimpleEvidence> evidence,
                                                 int r, double domain_conflict = 0.0);

// assignment[i] = (least element of focal i) - 1. Whenever every focal set
// is a subset of {1..r} this partition has conflict 0 in every cluster:
// co-clustered focals share their least element.
std::vector<int> lowest_element_assignment(std::span<const SimpleEvidence> evidence);

}  // namespace dsclust
