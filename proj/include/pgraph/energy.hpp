#pragma once

#include <optional>
#include <vector>

#include "pgraph/graph.hpp"
#include "pgraph/operators.hpp"

namespace pgraph {

struct EdgeTerm {
    VertexId x;
    VertexId y;
    double value;
};

struct EnergyReport {
    double total = 0.0;
    double gradient_part = 0.0;
    double potential_part = 0.0;
    std::optional<std::vector<EdgeTerm>> edge_terms;  // populated on request
};

/// h(f) = sum over undirected edges of b |grad f|^p  +  sum_x c(x) |f(x)|^p.
/// The edge sum visits each edge once; this equals half the double sum over
/// ordered pairs. total = gradient_part + potential_part exactly.
[[nodiscard]] EnergyReport energy(const WeightedGraph& g, const GraphFunction& f,
                                  const PExponent& p, bool with_edge_terms = false);

/// <f, phi> = sum_x f(x) phi(x) m(x) over the whole vertex set.
[[nodiscard]] double bracket(const WeightedGraph& g, const GraphFunction& f,
                             const GraphFunction& phi);

/// Simplified energy h_u(phi) for u >= 0: sum over undirected edges of
///   b u(x)u(y) (grad phi)^2
///     * ( (u(x)u(y))^{1/2} |grad phi| + (|phi(x)|+|phi(y)|)/2 * |grad u| )^{p-2}.
/// Terms whose leading factor vanishes are zero for every p (0 * inf = 0).
/// Requires p > 1.
[[nodiscard]] double simplified_energy(const WeightedGraph& g, const GraphFunction& u,
                                       const GraphFunction& phi, const PExponent& p);

/// h_{u,1}(phi) = sum over edges of b (u(x)u(y))^{p/2} |grad phi|^p. p > 1.
[[nodiscard]] double simplified_energy_1(const WeightedGraph& g, const GraphFunction& u,
                                         const GraphFunction& phi, const PExponent& p);

/// h_{u,2}(phi) = sum over edges of
///   b u(x)u(y) |grad u|^{p-2} ((|phi(x)|+|phi(y)|)/2)^{p-2} (grad phi)^2.
/// Defined for p >= 2 only; both power-0 factors collapse to 1 at p = 2.
[[nodiscard]] double simplified_energy_2(const WeightedGraph& g, const GraphFunction& u,
                                         const GraphFunction& phi, const PExponent& p);

/// h_{u,3}(phi) = sum over edges of
///   b u(x)u(y) (grad phi)^2 (|grad(u phi)| + |phi_u| |grad u|)^{p-2}
/// where phi_u(x,y) = phi(x) if grad_{x,y} u < 0, phi(y) if > 0, 0 if = 0.
/// Requires p > 1.
[[nodiscard]] double simplified_energy_3(const WeightedGraph& g, const GraphFunction& u,
                                         const GraphFunction& phi, const PExponent& p);

struct GsrReport {
    double lhs = 0.0;        // h(u phi) - <H u, u |phi|^p>
    double rhs = 0.0;        // h_u(phi)
    double ratio = 0.0;      // lhs / rhs when meaningful
    bool degenerate = false; // both sides below noise scale; ratio not meaningful
};

/// Ground state representation check: for u > 0 on the support neighborhood
/// and phi supported in the interior, lhs and rhs agree exactly at p = 2 and
/// are two-sided comparable otherwise. Requires p > 1.
[[nodiscard]] GsrReport gsr_check(const WeightedGraph& g, const GraphFunction& u,
                                  const GraphFunction& phi, const PExponent& p);

/// Picone slack h(u phi) - <H u, u |phi|^p>; nonnegative in exact arithmetic.
[[nodiscard]] double picone_residual(const WeightedGraph& g, const GraphFunction& u,
                                     const GraphFunction& phi, const PExponent& p);

struct CorollaryBounds {
    bool holds = false;       // direction appropriate to the p-regime
    double lhs = 0.0;         // gsr lhs
    double h_u1 = 0.0;
    double h_u2 = 0.0;        // NaN for p < 2
    double constant = 0.0;    // c_p used for the bound
    double slack = 0.0;       // >= 0 when the bound holds with room
    double ratio_h12 = 0.0;   // lhs / (h_u1 + h_u2), p >= 2, NaN when degenerate
    double equality_gap = 0.0; // |lhs - h_u1|, meaningful at p = 2
};

/// Two-sided comparison of the gsr lhs against h_{u,1}:
///   p >= 2 : lhs >= c_p h_{u,1} with the explicit c_p (see constant_cp);
///   1<p<=2 : lhs <= c' h_{u,1} where c' is the calibrated upper constant
///            (pass upper_constant; see gsr_upper_constant in inequalities).
[[nodiscard]] CorollaryBounds corollary_bounds_check(const WeightedGraph& g,
                                                     const GraphFunction& u,
                                                     const GraphFunction& phi, const PExponent& p,
                                                     std::optional<double> upper_constant = {},
                                                     double tol = 1e-9);

}  // namespace pgraph
