#include "dsclust/partition.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace dsclust {

namespace {

EvidenceList cluster_members(const Partition& p, std::span<const SimpleEvidence> evidence,
                             int cluster, int skip_id = -1, const SimpleEvidence* extra = nullptr) {
    EvidenceList members;
    for (std::size_t i = 0; i < evidence.size(); ++i) {
        if (static_cast<int>(i) == skip_id) continue;
        if (p.assignment[i] == cluster) members.push_back(evidence[i]);
    }
    if (extra) members.push_back(*extra);
    return members;
}

double mcf_of_conflicts(std::span<const double> conflicts, double c0) {
    double prod = 1.0 - c0;
    for (double c : conflicts) prod *= 1.0 - c;
    return 1.0 - prod;
}

}  // namespace

Partition make_partition(std::vector<int> assignment, int r,
                         std::span<const SimpleEvidence> evidence, double domain_conflict) {
    if (r < 1) throw BadSize("partition needs at least one cluster");
    if (assignment.size() != evidence.size())
        throw BadSize("assignment length does not match the evidence count");
    for (int c : assignment)
        if (c < 0 || c >= r) throw BadSize("cluster index outside [0, r)");
    Partition p{std::move(assignment), r, {}, domain_conflict};
    refresh_conflicts(p, evidence);
    return p;
}

double cluster_conflict(const Partition& p, std::span<const SimpleEvidence> evidence,
                        int cluster) {
    return combine_conflict(cluster_members(p, evidence, cluster));
}

void refresh_conflicts(Partition& p, std::span<const SimpleEvidence> evidence) {
    p.conflicts.assign(p.r, 0.0);
    for (int c = 0; c < p.r; ++c) p.conflicts[c] = cluster_conflict(p, evidence, c);
}

double metaconflict(const Partition& p) {
    return mcf_of_conflicts(p.conflicts, p.domain_conflict);
}

double log_sum_objective(const Partition& p) {
    if (p.domain_conflict != 0.0)
        throw Error("log-sum objective is defined for c0 = 0 only");
    double sum = 0.0;
    for (double c : p.conflicts) sum += weight_of_conflict(c);
    return sum;
}

TransferDelta evaluate_transfer(const Partition& p, std::span<const SimpleEvidence> evidence,
                                int evidence_id, int target_cluster) {
    const int from = p.assignment[evidence_id];
    if (target_cluster == from) throw SameCluster();

    TransferDelta d;
    d.evidence_id = evidence_id;
    d.from_cluster = from;
    d.to_cluster = target_cluster;
    d.new_from_conflict =
        combine_conflict(cluster_members(p, evidence, from, evidence_id));
    d.new_to_conflict = combine_conflict(
        cluster_members(p, evidence, target_cluster, -1, &evidence[evidence_id]));

    double prod = 1.0 - p.domain_conflict;
    for (int c = 0; c < p.r; ++c) {
        if (c == from || c == target_cluster) continue;
        prod *= 1.0 - p.conflicts[c];
    }
    d.new_mcf = 1.0 - prod * (1.0 - d.new_from_conflict) * (1.0 - d.new_to_conflict);
    d.favorable = d.new_mcf < metaconflict(p) - kImprovementTol;
    return d;
}

void apply_transfer(Partition& p, const TransferDelta& d) {
    p.assignment[d.evidence_id] = d.to_cluster;
    p.conflicts[d.from_cluster] = d.new_from_conflict;
    p.conflicts[d.to_cluster] = d.new_to_conflict;
}

std::pair<Partition, double> brute_force_min_mcf(std::span<const SimpleEvidence> evidence,
                                                 int r, double domain_conflict) {
    if (r < 1) throw BadSize("need at least one cluster");
    const std::size_t n = evidence.size();
    double combos = 1.0;
    for (std::size_t i = 0; i < n; ++i) combos *= r;
    if (combos > 1e7) throw TooLarge("r^N exceeds the 1e7 enumeration bound");

    // Per-cluster dense bodies over the union of all focal bits; assigning
    // evidence folds it in, backtracking restores the saved body.
    std::uint32_t uni = 0;
    for (const SimpleEvidence& e : evidence) uni |= e.focal.bits;
    std::array<int, 32> compact{};
    int k = 0;
    for (int b = 0; b < 32; ++b)
        if (uni >> b & 1u) compact[b] = k++;
    const std::uint32_t full = (k == 0) ? 0 : (1u << k) - 1;

    std::vector<std::uint32_t> focal(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t bits = evidence[i].focal.bits, out = 0;
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            out |= 1u << compact[b];
        }
        focal[i] = out;
    }

    std::vector<std::vector<double>> bodies(
        r, std::vector<double>(static_cast<std::size_t>(full) + 1, 0.0));
    for (auto& body : bodies) body[full] = 1.0;
    std::vector<double> conflicts(r, 0.0);

    std::vector<int> assignment(n, 0);
    std::vector<int> best_assignment;
    double best_mcf = std::numeric_limits<double>::infinity();

    auto fold = [&](std::vector<double>& body, std::size_t i) {
        std::vector<double> next(body.size(), 0.0);
        const std::uint32_t f = focal[i];
        const double m = evidence[i].mass;
        for (std::uint32_t s = 0; s <= full; ++s) {
            const double mass = body[s];
            if (mass == 0.0) continue;
            next[s & f] += mass * m;
            next[s] += mass * (1.0 - m);
        }
        body.swap(next);
    };

    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (depth == n) {
            const double mcf = mcf_of_conflicts(conflicts, domain_conflict);
            if (mcf < best_mcf) {
                best_mcf = mcf;
                best_assignment = assignment;
            }
            return;
        }
        for (int c = 0; c < r; ++c) {
            const std::vector<double> saved = bodies[c];
            const double saved_conflict = conflicts[c];
            fold(bodies[c], depth);
            conflicts[c] = bodies[c][0];
            assignment[depth] = c;
            // Conflicts only grow as the remaining evidence is placed, so a
            // partial Mcf at or past the best cannot beat it.
            if (mcf_of_conflicts(conflicts, domain_conflict) < best_mcf)
                self(self, depth + 1);
            bodies[c] = saved;
            conflicts[c] = saved_conflict;
        }
    };
    recurse(recurse, 0);

    Partition best = make_partition(std::move(best_assignment), r, evidence, domain_conflict);
    return {std::move(best), best_mcf};
}

std::vector<int> lowest_element_assignment(std::span<const SimpleEvidence> evidence) {
    std::vector<int> assignment(evidence.size());
    for (std::size_t i = 0; i < evidence.size(); ++i)
        assignment[i] = evidence[i].focal.min_element() - 1;
    return assignment;
}

}  // namespace dsclust
