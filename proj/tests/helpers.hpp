#pragma once

// Shared helpers for the test suites.

#include <initializer_list>
#include <vector>

#include "dsclust/evidence.hpp"
#include "dsclust/rng.hpp"

namespace dsclust::test {

inline FocalSet focal(std::initializer_list<int> elements) {
    std::uint32_t bits = 0;
    for (int e : elements) bits |= 1u << (e - 1);
    return FocalSet(bits);
}

inline SimpleEvidence ev(std::initializer_list<int> elements, double mass, int id = 0) {
    return make_evidence(focal(elements), mass, id);
}

// Random evidence with nonempty focals inside the frame.
inline EvidenceList random_evidence(Rng& rng, int n, int frame_size, double mass_lo = 0.01,
                                    double mass_hi = 0.99) {
    EvidenceList out;
    out.reserve(n);
    const std::uint32_t n_subsets = (1u << frame_size) - 1;
    for (int i = 0; i < n; ++i)
        out.push_back(make_evidence(FocalSet(1u + rng.below(n_subsets)),
                                    rng.uniform(mass_lo, mass_hi), i));
    return out;
}

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[rng.below(static_cast<std::uint32_t>(i))]);
}

}  // namespace dsclust::test
