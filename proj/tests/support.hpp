#pragma once

// Shared fixtures and independent oracles for the test suites. Oracles
// recompute every quantity by a different route than the library (naive
// double sums in extended precision, coordinate-descent minimization) so a
// shared bug cannot cancel out.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "pgraph/criticality.hpp"
#include "pgraph/energy.hpp"
#include "pgraph/graph.hpp"
#include "pgraph/models.hpp"
#include "pgraph/numeric.hpp"
#include "pgraph/operators.hpp"

namespace testsupport {

using namespace pgraph;

/// Unit path 0-1-...-(n-1), m = 1, c = 0; whole vertex set interior unless
/// an explicit interior is given.
inline WeightedGraph path_graph(int n, std::optional<VertexSet> interior = std::nullopt) {
    std::vector<EdgeRecord> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return WeightedGraph(std::vector<double>(static_cast<std::size_t>(n), 1.0),
                         std::vector<double>(static_cast<std::size_t>(n), 0.0), edges,
                         std::move(interior));
}

inline long double powl_abs(long double t, long double e) {
    if (t == 0.0L) return e == 0.0L ? 1.0L : 0.0L;
    return std::pow(std::abs(t), e);
}

inline long double phi_p_ld(long double t, long double p) {
    if (t == 0.0L) return 0.0L;
    const long double mag = std::pow(std::abs(t), p - 1.0L);
    return t > 0.0L ? mag : -mag;
}

/// Naive full double-sum energy: (1/2) sum_{x,y} b |f(x)-f(y)|^p + sum c |f|^p.
inline long double oracle_energy(const WeightedGraph& g, const GraphFunction& f, long double p) {
    long double grad = 0.0L;
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = 0; y < g.vertex_count(); ++y) {
            const double b = g.weight(x, y);
            if (b > 0.0)
                grad += static_cast<long double>(b) *
                        powl_abs(static_cast<long double>(f[static_cast<std::size_t>(x)]) -
                                     static_cast<long double>(f[static_cast<std::size_t>(y)]),
                                 p);
        }
    long double pot = 0.0L;
    for (int x = 0; x < g.vertex_count(); ++x)
        pot += static_cast<long double>(g.potential(x)) *
               powl_abs(f[static_cast<std::size_t>(x)], p);
    return grad / 2.0L + pot;
}

/// H f(x) recomputed directly in extended precision.
inline long double oracle_schroedinger_at(const WeightedGraph& g, const GraphFunction& f,
                                          VertexId x, long double p) {
    long double s = 0.0L;
    for (const Neighbor& nb : g.neighbors(x))
        s += static_cast<long double>(nb.weight) *
             phi_p_ld(static_cast<long double>(f[static_cast<std::size_t>(x)]) -
                          static_cast<long double>(f[static_cast<std::size_t>(nb.id)]),
                      p);
    s += static_cast<long double>(g.potential(x)) *
         phi_p_ld(f[static_cast<std::size_t>(x)], p);
    return s / static_cast<long double>(g.measure(x));
}

/// Representation left side by the defining route: h(u phi) minus the
/// operator pairing, everything in extended precision.
inline long double oracle_gsr_lhs(const WeightedGraph& g, const GraphFunction& u,
                                  const GraphFunction& phi, long double p) {
    GraphFunction uphi(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) uphi[i] = u[i] * phi[i];
    long double lhs = oracle_energy(g, uphi, p);
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (phi[static_cast<std::size_t>(x)] == 0.0) continue;
        lhs -= oracle_schroedinger_at(g, u, x, p) *
               static_cast<long double>(u[static_cast<std::size_t>(x)]) *
               powl_abs(phi[static_cast<std::size_t>(x)], p) *
               static_cast<long double>(g.measure(x));
    }
    return lhs;
}

/// Simplified energies by naive double loop. degenerate-factor rule: a zero
/// quadratic factor kills the term before the (possibly negative) exponent.
inline long double oracle_simplified(const WeightedGraph& g, const GraphFunction& u,
                                     const GraphFunction& phi, long double p) {
    long double total = 0.0L;
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = 0; y < g.vertex_count(); ++y) {
            const double b = g.weight(x, y);
            if (b <= 0.0) continue;
            const long double ux = u[static_cast<std::size_t>(x)];
            const long double uy = u[static_cast<std::size_t>(y)];
            const long double px = phi[static_cast<std::size_t>(x)];
            const long double py = phi[static_cast<std::size_t>(y)];
            const long double factor = b * ux * uy * (px - py) * (px - py);
            if (factor == 0.0L) continue;
            const long double bracket = std::sqrt(ux * uy) * std::abs(px - py) +
                                        (std::abs(px) + std::abs(py)) / 2.0L * std::abs(ux - uy);
            total += factor * powl_abs(bracket, p - 2.0L);
        }
    return total / 2.0L;
}

inline long double oracle_simplified_1(const WeightedGraph& g, const GraphFunction& u,
                                       const GraphFunction& phi, long double p) {
    long double total = 0.0L;
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = 0; y < g.vertex_count(); ++y) {
            const double b = g.weight(x, y);
            if (b <= 0.0) continue;
            const long double prod = static_cast<long double>(u[static_cast<std::size_t>(x)]) *
                                     u[static_cast<std::size_t>(y)];
            const long double dphi = static_cast<long double>(phi[static_cast<std::size_t>(x)]) -
                                     phi[static_cast<std::size_t>(y)];
            total += b * powl_abs(prod, p / 2.0L) * powl_abs(dphi, p);
        }
    return total / 2.0L;
}

inline long double oracle_simplified_2(const WeightedGraph& g, const GraphFunction& u,
                                       const GraphFunction& phi, long double p) {
    long double total = 0.0L;
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = 0; y < g.vertex_count(); ++y) {
            const double b = g.weight(x, y);
            if (b <= 0.0) continue;
            const long double ux = u[static_cast<std::size_t>(x)];
            const long double uy = u[static_cast<std::size_t>(y)];
            const long double px = phi[static_cast<std::size_t>(x)];
            const long double py = phi[static_cast<std::size_t>(y)];
            const long double factor = b * ux * uy * (px - py) * (px - py);
            if (factor == 0.0L) continue;
            total += factor * powl_abs(ux - uy, p - 2.0L) *
                     powl_abs((std::abs(px) + std::abs(py)) / 2.0L, p - 2.0L);
        }
    return total / 2.0L;
}

inline long double oracle_simplified_3(const WeightedGraph& g, const GraphFunction& u,
                                       const GraphFunction& phi, long double p) {
    long double total = 0.0L;
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = 0; y < g.vertex_count(); ++y) {
            const double b = g.weight(x, y);
            if (b <= 0.0) continue;
            const long double ux = u[static_cast<std::size_t>(x)];
            const long double uy = u[static_cast<std::size_t>(y)];
            const long double px = phi[static_cast<std::size_t>(x)];
            const long double py = phi[static_cast<std::size_t>(y)];
            const long double factor = b * ux * uy * (px - py) * (px - py);
            if (factor == 0.0L) continue;
            long double phi_sel = 0.0L;
            if (ux - uy < 0.0L) phi_sel = px;
            if (ux - uy > 0.0L) phi_sel = py;
            const long double bracket =
                std::abs(ux * px - uy * py) + std::abs(phi_sel) * std::abs(ux - uy);
            total += factor * powl_abs(bracket, p - 2.0L);
        }
    return total / 2.0L;
}

/// Energy as a plain double for the minimization oracles.
inline double plain_energy(const WeightedGraph& g, const GraphFunction& f, double p) {
    double s = 0.0;
    for (const EdgeRecord& e : g.edges())
        s += e.b * std::pow(std::abs(f[static_cast<std::size_t>(e.x)] -
                                     f[static_cast<std::size_t>(e.y)]),
                            p);
    for (int x = 0; x < g.vertex_count(); ++x)
        s += g.potential(x) *
             std::pow(std::abs(f[static_cast<std::size_t>(x)]), p);
    return s;
}

/// Golden-section minimization of a unimodal slice.
template <typename F>
double golden_min(F f, double lo, double hi, int iters = 200) {
    const double r = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - r * (b - a), x2 = a + r * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters && b - a > 1e-14; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = f(x2);
        }
    }
    return (a + b) / 2.0;
}

/// Capacity oracle: cyclic coordinate descent. Each slice in one coordinate
/// is scanned on a coarse grid, then refined by golden section around the
/// best cell, which also handles nonconvex slices from negative potentials.
inline double brute_capacity(const WeightedGraph& g, VertexId x0, const VertexSet& V, double p,
                             double pin = 1.0, int sweeps = 400) {
    GraphFunction f(static_cast<std::size_t>(g.vertex_count()), 0.0);
    f[static_cast<std::size_t>(x0)] = pin;
    std::vector<VertexId> free_ids;
    for (VertexId x : V.members())
        if (x != x0) free_ids.push_back(x);

    double prev = plain_energy(g, f, p);
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        for (VertexId z : free_ids) {
            auto slice = [&](double t) {
                double s = g.potential(z) * std::pow(std::abs(t), p);
                for (const Neighbor& nb : g.neighbors(z))
                    s += nb.weight *
                         std::pow(std::abs(t - f[static_cast<std::size_t>(nb.id)]), p);
                return s;
            };
            const double lo = -std::abs(pin) - 1.5, hi = std::abs(pin) + 1.5;
            double best_t = f[static_cast<std::size_t>(z)];
            double best_v = slice(best_t);
            for (double t = lo; t <= hi; t += 1e-2) {
                const double v = slice(t);
                if (v < best_v) {
                    best_v = v;
                    best_t = t;
                }
            }
            best_t = golden_min(slice, best_t - 2e-2, best_t + 2e-2);
            f[static_cast<std::size_t>(z)] = best_t;
        }
        const double cur = plain_energy(g, f, p);
        if (prev - cur < 1e-15 * (1.0 + std::abs(cur)) && sweep > 2) break;
        prev = cur;
    }
    return plain_energy(g, f, p);
}

/// Random function on the whole vertex set, uniform in [lo, hi).
inline GraphFunction uniform_values(const WeightedGraph& g, double lo, double hi,
                                     std::uint64_t seed) {
    SplitMix64 rng(seed);
    GraphFunction u(static_cast<std::size_t>(g.vertex_count()));
    for (double& v : u) v = rng.next_in(lo, hi);
    return u;
}

}  // namespace testsupport
