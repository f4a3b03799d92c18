#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "pgraph/graph.hpp"
#include "pgraph/operators.hpp"

namespace pgraph::models {

/// Finite window of an infinite model. labels[v] is the model-level
/// coordinate of vertex v, stable across window radii so exhaustion sweeps
/// can compare functions on a common core.
struct Window {
    WeightedGraph graph;
    std::vector<std::int64_t> labels;

    /// Vertex id carrying the given label; throws if absent.
    [[nodiscard]] VertexId locate(std::int64_t label) const;

private:
    mutable std::unordered_map<std::int64_t, VertexId> index_;
};

/// Half-line 0..radius with unit weights, m = 1, c = 0. Vertex 0 is the
/// Dirichlet boundary of the model; the window cut adds vertex `radius`, so
/// interior = {1..radius-1}. Labels are the integer coordinates. radius >= 2.
[[nodiscard]] Window nat_line(int radius);

/// Integer line -radius..radius, unit weights, m = 1, c = 0,
/// interior = {-radius+1..radius-1}. Labels are the coordinates. radius >= 1.
[[nodiscard]] Window int_line(int radius);

/// Square grid {-radius..radius}^2 with unit weights, m = 1, c = 0; interior
/// excludes the outer ring. Labels encode (i, j) as i * 100000 + j.
[[nodiscard]] Window grid2d(int radius);

[[nodiscard]] std::int64_t grid_label(int i, int j);

/// Path 0..weights.size() with edge i--(i+1) of weight weights[i]; m = 1,
/// c = 0, interior excludes both endpoints. Zero or negative weights are
/// rejected: they would silently disconnect the line.
[[nodiscard]] Window weighted_line(std::span<const double> weights);

/// Center 0 joined to `leaves` leaves with the given uniform weight.
[[nodiscard]] WeightedGraph star(int leaves, double weight);

/// Complete graph on n vertices with uniform weight.
[[nodiscard]] WeightedGraph complete(int n, double weight = 1.0);

/// Positive profile n -> n^{(p-1)/p} on the half-line; superharmonic for the
/// pure energy there, and the source of the improved Hardy weight (always
/// computed as (Delta u) / u^{p-1}, never hard-coded). n >= 0, p > 1.
[[nodiscard]] double hardy_u(std::int64_t n, const PExponent& p);

/// alpha(n) = (1 - 1/n)^{1/q} with q = p/(p-1); equals u(n-1)/u(n) for the
/// profile above. n >= 1, p > 1.
[[nodiscard]] double alpha_seq(std::int64_t n, const PExponent& p);

struct DisplayCheck {
    double lhs = 0.0;   // energy of phi minus the weighted mass term
    double rhs = 0.0;   // alpha-form edge sum
    double ratio = 0.0; // lhs / rhs when meaningful
    bool degenerate = false;
};

/// Half-line representation identity in its alpha form: for phi supported in
/// the window interior,
///   sum_{n>=1} |phi(n)-phi(n-1)|^p - w(n) |phi(n)|^p
///     ~ sum_{n>=2} alpha^{1-p}(n) (alpha(n) phi(n) - phi(n-1))^2
///         * ( alpha^{1/2}(n) |alpha(n) phi(n) - phi(n-1)|
///             + (alpha(n)|phi(n)| + |phi(n-1)|)/2 * (1 - alpha(n)) )^{p-2}
/// with w = (Delta u)/u^{p-1} for the Hardy profile; equality at p = 2.
/// phi lives on nat_line(radius) ids and must vanish outside the interior;
/// the last interior vertex must also be zero so window truncation is exact.
[[nodiscard]] DisplayCheck gsr_display_check(int radius, const PExponent& p,
                                             const GraphFunction& phi);

struct RandomGraphSpec {
    int n = 16;
    double edge_prob = 0.3;
    double b_min = 1e-3, b_max = 1.0;  // weights drawn uniformly in (b_min, b_max]
    double m_min = 0.5, m_max = 2.0;
    double c_min = 0.0, c_max = 0.0;
    bool connect = true;  // thread a random spanning path so the graph is connected
};

/// Seeded Erdos-Renyi graph with uniform weights, measure and potential.
/// Deterministic for a given spec + seed on every platform.
[[nodiscard]] WeightedGraph random_graph(const RandomGraphSpec& spec, std::uint64_t seed);

/// Seeded function with independent uniform values in [lo, hi) on the given
/// set, zero elsewhere.
[[nodiscard]] GraphFunction random_function(const WeightedGraph& g, const VertexSet& on,
                                            double lo, double hi, std::uint64_t seed);

}  // namespace pgraph::models
