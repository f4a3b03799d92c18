#pragma once

#include "pgraph/graph.hpp"

namespace pgraph {

/// Validated exponent p >= 1. Construction rejects p < 1, NaN and infinity;
/// operations defined only for p > 1 call require_greater_than_one().
class PExponent {
public:
    explicit PExponent(double p);

    [[nodiscard]] double value() const { return p_; }

    /// Hoelder conjugate q = p / (p - 1); requires p > 1.
    [[nodiscard]] double conjugate() const;

    void require_greater_than_one(const char* context) const;

private:
    double p_;
};

/// phi_p(t) = |t|^{p-2} t = |t|^{p-1} sgn(t), with phi_p(0) = 0 for every
/// p >= 1 (the 0 * infinity convention for p < 2).
[[nodiscard]] double phi_p(double t, const PExponent& p);

/// Difference along an oriented edge: grad_{x,y} f = f(x) - f(y).
[[nodiscard]] inline double gradient(const GraphFunction& f, VertexId x, VertexId y) {
    return f[static_cast<std::size_t>(x)] - f[static_cast<std::size_t>(y)];
}

/// (L f)(x) = (1/m(x)) sum_y b(x,y) phi_p(f(x) - f(y)).
/// x must lie in the interior: outside it the stored neighborhood is
/// incomplete and the value would be meaningless.
[[nodiscard]] double p_laplacian(const WeightedGraph& g, const GraphFunction& f, VertexId x,
                                 const PExponent& p);

/// (H f)(x) = (L f)(x) + (c(x)/m(x)) phi_p(f(x)).
[[nodiscard]] double schroedinger_at(const WeightedGraph& g, const GraphFunction& f, VertexId x,
                                     const PExponent& p);

/// H f on the whole vertex set; entries outside the interior are NaN
/// (undefined there, deliberately not zero).
[[nodiscard]] GraphFunction schroedinger_apply(const WeightedGraph& g, const GraphFunction& f,
                                               const PExponent& p);

/// Residual |LHS - RHS| of the summation-by-parts identity
///   sum_{x in V} H f(x) phi(x) m(x)
///     = (1/2) sum_{x,y in V} b phi_p(grad f) grad phi
///       + sum_{x in V} c phi_p(f) phi
///       + sum_{x in V, y in bd V} b phi_p(grad_{x,y} f) phi(x).
/// V must lie inside the interior; phi is arbitrary on the graph.
[[nodiscard]] double greens_residual(const WeightedGraph& g, const GraphFunction& f,
                                     const GraphFunction& phi, const VertexSet& V,
                                     const PExponent& p);

enum class Harmonicity { harmonic, superharmonic, subharmonic, neither };

[[nodiscard]] const char* to_string(Harmonicity h);

struct HarmonicityClass {
    Harmonicity kind = Harmonicity::neither;
    double tolerance = 0.0;      // resolved tolerance actually used
    double max_value = 0.0;      // max of H u over V
    double min_value = 0.0;      // min of H u over V
};

/// Scale-aware default: 1e-9 * (1 + max|u|^{p-1} * max_deg / min_m).
[[nodiscard]] double default_classify_tolerance(const WeightedGraph& g, const GraphFunction& u,
                                                const PExponent& p);

/// Signs of H u over V (subset of the interior), within tolerance:
/// harmonic when |H u| <= tol everywhere, superharmonic when H u >= -tol
/// everywhere and > tol somewhere, subharmonic mirrored, else neither.
/// tolerance <= 0 selects the scale-aware default.
[[nodiscard]] HarmonicityClass classify(const WeightedGraph& g, const GraphFunction& u,
                                        const VertexSet& V, const PExponent& p,
                                        double tolerance = 0.0);

}  // namespace pgraph
