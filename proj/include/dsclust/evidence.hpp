#pragma once

// Frame of discernment, simple support functions, and conflict of the
// unnormalized conjunctive (Dempster) combination. Mass landing on the
// empty set is retained across folds, never redistributed; that scalar is
// all the downstream optimizers consume.

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "dsclust/errors.hpp"

namespace dsclust {

// Frame of discernment {1, 2, ..., size}. Subsets are bitmasks where bit
// b stands for element b+1, so the cap of 16 keeps every subset in a
// uint32_t with room to spare.
struct Frame {
    static constexpr int kMaxSize = 16;

    explicit Frame(int n) : size(n) {
        if (n < 1 || n > kMaxSize)
            throw BadSize("frame size must be in [1, " + std::to_string(kMaxSize) + "]");
    }

    std::uint32_t full_mask() const { return (1u << size) - 1; }

    int size;
};

// Subset of frame elements as a bitmask.
struct FocalSet {
    std::uint32_t bits = 0;

    constexpr FocalSet() = default;
    constexpr explicit FocalSet(std::uint32_t b) : bits(b) {}

    // From 1-based element numbers, validated against the frame.
    static FocalSet from_elements(std::span<const int> elements, Frame frame);

    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }

    // Least element (1-based); requires a nonempty set.
    int min_element() const { return std::countr_zero(bits) + 1; }

    // Elements as ascending 1-based numbers.
    std::vector<int> elements() const;

    friend constexpr bool operator==(FocalSet, FocalSet) = default;
    friend constexpr FocalSet operator&(FocalSet a, FocalSet b) { return FocalSet(a.bits & b.bits); }
    friend constexpr FocalSet operator|(FocalSet a, FocalSet b) { return FocalSet(a.bits | b.bits); }
};

// One simple support function: mass on a single nonempty focal element,
// the rest of the mass on the whole frame.
struct SimpleEvidence {
    int id = 0;
    FocalSet focal;
    double mass = 0.0;  // in (0,1)
};

using EvidenceList = std::vector<SimpleEvidence>;

// Validates and builds a piece of evidence.
SimpleEvidence make_evidence(FocalSet focal, double mass, int id);

// m_a * m_b when the focals are disjoint, otherwise 0. Always < 1 for
// valid evidence.
double pairwise_conflict(const SimpleEvidence& a, const SimpleEvidence& b);

// Weight of evidence -log(1 - c), natural log. Strictly increasing on
// [0,1), zero at zero.
double weight_of_conflict(double c);

// Result of the unnormalized conjunctive combination over a frame: masses
// keyed by subset bitmask, including the empty set and the full frame.
// They sum to 1; the empty-set entry is the conflict.
struct BodyOfEvidence {
    explicit BodyOfEvidence(Frame f) : frame(f) {}

    double conflict() const;
    double total_mass() const;

    Frame frame;
    std::map<std::uint32_t, double> masses;
};

BodyOfEvidence combine(std::span<const SimpleEvidence> evidence, Frame frame);

// Conflict (empty-set mass) of the combination of all listed evidence.
// Empty and singleton lists give 0. Fold order does not change the result
// beyond rounding; tests pin this against the enumeration oracle.
double combine_conflict(std::span<const SimpleEvidence> evidence);

// Independent oracle: sum over all selections S of the list with empty
// focal intersection of prod_{j in S} m_j * prod_{j not in S} (1 - m_j).
// The intersection over the empty selection is the frame, never empty.
// Enumerates 2^N selections; N <= 20.
double brute_force_conflict(std::span<const SimpleEvidence> evidence);

}  // namespace dsclust
