#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pgraph {

/// Deterministic pairwise (tree) reduction over terms in index order.
/// Used for every long sum so results do not depend on traversal or
/// parallel split; identical inputs give identical bits.
inline double pairwise_sum(std::span<const double> terms) {
    const std::size_t n = terms.size();
    if (n <= 16) {
        double s = 0.0;
        for (double t : terms) s += t;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

/// Collects terms in deterministic order, reduces pairwise on demand.
class TermAccumulator {
public:
    void reserve(std::size_t n) { terms_.reserve(n); }
    void add(double t) { terms_.push_back(t); }
    [[nodiscard]] double sum() const { return pairwise_sum(terms_); }
    [[nodiscard]] std::size_t count() const { return terms_.size(); }

private:
    std::vector<double> terms_;
};

/// SplitMix64: tiny, portable, reproducible across platforms and library
/// versions. All seeded randomness in the project flows through this so
/// reports are byte-identical for identical config + seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

}  // namespace pgraph
