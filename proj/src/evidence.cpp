#include "dsclust/evidence.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace dsclust {

FocalSet FocalSet::from_elements(std::span<const int> elements, Frame frame) {
    std::uint32_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > frame.size)
            throw BadSize("element " + std::to_string(e) + " outside frame of size " +
                          std::to_string(frame.size));
        bits |= 1u << (e - 1);
    }
    return FocalSet(bits);
}

std::vector<int> FocalSet::elements() const {
    std::vector<int> out;
    for (int b = 0; b < 32; ++b)
        if (bits >> b & 1u) out.push_back(b + 1);
    return out;
}

SimpleEvidence make_evidence(FocalSet focal, double mass, int id) {
    if (focal.empty()) throw EmptyFocal();
    if (!(mass > 0.0 && mass < 1.0)) throw MassOutOfRange(mass);
    return SimpleEvidence{id, focal, mass};
}

double pairwise_conflict(const SimpleEvidence& a, const SimpleEvidence& b) {
    return (a.focal & b.focal).empty() ? a.mass * b.mass : 0.0;
}

double weight_of_conflict(double c) {
    if (c >= 1.0) throw ConflictAtOne();
    if (c < 0.0) throw Error("conflict must be nonnegative");
    return -std::log1p(-c);
}

double BodyOfEvidence::conflict() const {
    auto it = masses.find(0u);
    return it == masses.end() ? 0.0 : it->second;
}

double BodyOfEvidence::total_mass() const {
    double sum = 0.0;
    for (const auto& [set, m] : masses) sum += m;
    return sum;
}

BodyOfEvidence combine(std::span<const SimpleEvidence> evidence, Frame frame) {
    BodyOfEvidence body(frame);
    body.masses[frame.full_mask()] = 1.0;
    for (const SimpleEvidence& e : evidence) {
        if ((e.focal.bits & ~frame.full_mask()) != 0)
            throw BadSize("focal element outside the frame");
        std::map<std::uint32_t, double> next;
        for (const auto& [set, m] : body.masses) {
            next[set & e.focal.bits] += m * e.mass;
            next[set] += m * (1.0 - e.mass);
        }
        body.masses = std::move(next);
    }
    return body;
}

// Dense fold over the union of the focal bits. Any superset of every focal
// works as the carrier of the uncommitted mass, so the union stands in for
// the frame; the empty-set mass is identical either way.
double combine_conflict(std::span<const SimpleEvidence> evidence) {
    if (evidence.size() < 2) return 0.0;

    std::uint32_t uni = 0;
    for (const SimpleEvidence& e : evidence) uni |= e.focal.bits;

    // Remap the union bits onto compact positions 0..k-1.
    std::array<int, 32> compact{};
    int k = 0;
    for (int b = 0; b < 32; ++b)
        if (uni >> b & 1u) compact[b] = k++;

    auto compress = [&](std::uint32_t bits) {
        std::uint32_t out = 0;
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            out |= 1u << compact[b];
        }
        return out;
    };

    const std::uint32_t full = (k == 32) ? ~0u : (1u << k) - 1;
    std::vector<double> body(static_cast<std::size_t>(full) + 1, 0.0);
    std::vector<double> next(body.size());
    body[full] = 1.0;

    for (const SimpleEvidence& e : evidence) {
        const std::uint32_t f = compress(e.focal.bits);
        std::fill(next.begin(), next.end(), 0.0);
        for (std::uint32_t s = 0; s <= full; ++s) {
            const double m = body[s];
            if (m == 0.0) continue;
            next[s & f] += m * e.mass;
            next[s] += m * (1.0 - e.mass);
        }
        body.swap(next);
    }
    return body[0];
}

double brute_force_conflict(std::span<const SimpleEvidence> evidence) {
    const std::size_t n = evidence.size();
    if (n > 20) throw TooLarge("brute-force conflict enumerates 2^N selections; N <= 20");

    double sum = 0.0;
    for (std::uint32_t sel = 0; sel < (1u << n); ++sel) {
        std::uint32_t inter = ~0u;  // stands in for the frame; focals are nonempty
        double p = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (sel >> j & 1u) {
                inter &= evidence[j].focal.bits;
                p *= evidence[j].mass;
            } else {
                p *= 1.0 - evidence[j].mass;
            }
        }
        if (inter == 0) sum += p;
    }
    return sum;
}

}  // namespace dsclust
