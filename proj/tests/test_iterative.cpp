#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dsclust/bench.hpp"
#include "dsclust/iterative.hpp"
#include "helpers.hpp"

using namespace dsclust;
using dsclust::test::ev;
using dsclust::test::random_evidence;

namespace {

Partition random_partition(const EvidenceList& e, int r, Rng& rng) {
    std::vector<int> assignment(e.size());
    for (int& a : assignment) a = static_cast<int>(rng.below(static_cast<std::uint32_t>(r)));
    return make_partition(std::move(assignment), r, e);
}

}  // namespace

TEST_CASE("no favorable move exists at an all-zero-conflict partition") {
    Rng rng = Rng::substream(31, 0, 0);
    const EvidenceList e = gen_exhaustive(3, rng);
    const Partition p = make_partition(lowest_element_assignment(e), 3, e);
    CHECK_FALSE(best_move(p, e).has_value());
}

TEST_CASE("best_move finds the transfer reaching Mcf* = 0") {
    const EvidenceList e = {ev({1}, 0.5, 0), ev({2}, 0.5, 1), ev({2}, 0.5, 2)};
    const Partition p = make_partition({0, 0, 1}, 2, e);
    const auto move = best_move(p, e);
    REQUIRE(move.has_value());
    CHECK(move->evidence_id == 1);
    CHECK(move->to_cluster == 1);
    CHECK(move->new_mcf == 0.0);
}

TEST_CASE("ties break to the lowest evidence id, then the lowest target") {
    // Two conflicting evidence in one cluster; moving either apart reaches 0.
    const EvidenceList e = {ev({1}, 0.5, 0), ev({2}, 0.5, 1)};
    const Partition two = make_partition({0, 0}, 2, e);
    const auto move = best_move(two, e);
    REQUIRE(move.has_value());
    CHECK(move->evidence_id == 0);
    CHECK(move->to_cluster == 1);

    const Partition three = make_partition({0, 0}, 3, e);
    const auto move3 = best_move(three, e);
    REQUIRE(move3.has_value());
    CHECK(move3->evidence_id == 0);
    CHECK(move3->to_cluster == 1);
}

TEST_CASE("optimize leaves an already optimal start untouched") {
    Rng rng = Rng::substream(32, 0, 0);
    const EvidenceList e = gen_exhaustive(3, rng);
    Partition p = make_partition(lowest_element_assignment(e), 3, e);
    const auto [optimized, trace] = optimize(std::move(p), e);
    CHECK(trace.steps.empty());
    CHECK_FALSE(trace.budget_exhausted);
    CHECK(metaconflict(optimized) == 0.0);
}

TEST_CASE("every applied move strictly lowers Mcf") {
    Rng rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        const EvidenceList e = random_evidence(rng, 8, 4);
        const auto [optimized, trace] = optimize(random_partition(e, 3, rng), e);
        double prev = trace.initial_mcf;
        for (const MoveStep& s : trace.steps) {
            CHECK(s.mcf_after < prev - kImprovementTol);
            prev = s.mcf_after;
        }
        CHECK(metaconflict(optimized) == doctest::Approx(prev).epsilon(1e-12));
    }
}

TEST_CASE("termination by absence means no favorable transfer remains") {
    Rng rng(34);
    for (int trial = 0; trial < 5; ++trial) {
        const EvidenceList e = random_evidence(rng, 8, 4);
        const auto [optimized, trace] = optimize(random_partition(e, 3, rng), e);
        REQUIRE_FALSE(trace.budget_exhausted);
        for (std::size_t q = 0; q < e.size(); ++q) {
            for (int k = 0; k < optimized.r; ++k) {
                if (k == optimized.assignment[q]) continue;
                CHECK_FALSE(evaluate_transfer(optimized, e, static_cast<int>(q), k).favorable);
            }
        }
    }
}

TEST_CASE("optimize is deterministic") {
    Rng rng(35);
    const EvidenceList e = random_evidence(rng, 10, 4);
    const Partition start = random_partition(e, 3, rng);

    const auto [p1, t1] = optimize(start, e);
    const auto [p2, t2] = optimize(start, e);
    CHECK(p1.assignment == p2.assignment);
    REQUIRE(t1.steps.size() == t2.steps.size());
    for (std::size_t i = 0; i < t1.steps.size(); ++i) {
        CHECK(t1.steps[i].evidence_id == t2.steps[i].evidence_id);
        CHECK(t1.steps[i].to_cluster == t2.steps[i].to_cluster);
        CHECK(t1.steps[i].mcf_after == t2.steps[i].mcf_after);
    }
}

TEST_CASE("final Mcf matches a from-scratch recomputation") {
    Rng rng(36);
    const EvidenceList e = random_evidence(rng, 9, 4);
    auto [optimized, trace] = optimize(random_partition(e, 3, rng), e);
    Partition fresh = optimized;
    refresh_conflicts(fresh, e);
    CHECK(std::abs(metaconflict(optimized) - metaconflict(fresh)) <= 1e-12);
}

TEST_CASE("a zero move budget reports exhaustion when moves remain") {
    const EvidenceList e = {ev({1}, 0.5, 0), ev({2}, 0.5, 1)};
    Partition p = make_partition({0, 0}, 2, e);
    const auto [unchanged, trace] = optimize(std::move(p), e, 0);
    CHECK(trace.steps.empty());
    CHECK(trace.budget_exhausted);
    CHECK(unchanged.assignment == std::vector<int>{0, 0});
}

TEST_CASE("cold starts reach the known global optimum at least once in ten") {
    // Exhaustive family at n = 3: the global minimum is 0.
    Rng gen = Rng::substream(37, 0, 0);
    const EvidenceList e = gen_exhaustive(3, gen);
    const auto [bp, bmcf] = brute_force_min_mcf(e, 3);
    CHECK(bmcf == 0.0);

    double best = 1.0;
    for (int s = 0; s < 10; ++s) {
        Rng rng = Rng::substream(37, static_cast<std::uint64_t>(s), 1);
        const auto [optimized, trace] = optimize(random_partition(e, 3, rng), e);
        const double mcf = metaconflict(optimized);
        CHECK(mcf >= bmcf - 1e-12);  // never beats the exhaustive optimum
        best = std::min(best, mcf);
    }
    CHECK(best == 0.0);
}
