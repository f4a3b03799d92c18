#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "pgraph/operators.hpp"

namespace pgraph {

namespace detail {

template <class Real>
struct Sides {
    Real lhs;
    Real rhs;
};

/// Sides of the pointwise energy-difference comparison
///   lhs = |a-t|^p - (1-t)^{p-1} (|a|^p - t)
///   rhs = t (a-1)^2 (|a-t| + 1 - t)^{p-2}
/// for t in [0,1], p > 1. When the quadratic factor vanishes the rhs is 0 by
/// the 0 * infinity convention (covers a = t = 1 with 1 < p < 2).
template <class Real>
Sides<Real> ineq2_sides_impl(Real a, Real t, Real p) {
    using std::abs;
    using std::pow;
    Sides<Real> s;
    s.lhs = pow(abs(a - t), p) - pow(Real(1) - t, p - 1) * (pow(abs(a), p) - t);
    const Real factor = t * (a - 1) * (a - 1);
    s.rhs = factor == Real(0) ? Real(0)
                              : factor * pow(abs(a - t) + Real(1) - t, p - 2);
    return s;
}

/// Sides of the one-sided comparison against the power-mean kernel
///   lhs as above, rhs = t^{p/2} |a-1|^p.
template <class Real>
Sides<Real> gsr_like_sides_impl(Real a, Real t, Real p) {
    using std::abs;
    using std::pow;
    Sides<Real> s;
    s.lhs = pow(abs(a - t), p) - pow(Real(1) - t, p - 1) * (pow(abs(a), p) - t);
    const Real d = abs(a - 1);
    s.rhs = (t == Real(0) || d == Real(0)) ? Real(0) : pow(t, p / 2) * pow(d, p);
    return s;
}

}  // namespace detail

/// Grid point of the scalar scans.
struct InequalityPoint {
    double a = 0.0;
    double t = 0.0;
};

/// lhs/rhs of the two-sided pointwise comparison at (a, t). t in [0,1], p > 1.
[[nodiscard]] std::pair<double, double> ineq2_sides(double a, double t, const PExponent& p);

struct Ineq1Result {
    double value = 0.0;    // |a-t| + 1 - t
    double bracket = 0.0;  // t^{1/2} |a-1| + (1-t)(|a|+1)/2
    bool upper_holds = false;  // value <= C * bracket
    bool lower_holds = false;  // value >= C * bracket
};

/// Splitting bound for the bracket term: upper direction is sharp at C = 2,
/// lower at C = 1/2; both fail somewhere on the standard grid for any
/// better constant. t in [0,1].
[[nodiscard]] Ineq1Result ineq1_check(double a, double t, double C);

struct Ineq34Result {
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Regime-appropriate power comparison at (a, t):
///   1 < p <= 2 :  t (a-1)^2 <= t^{p/2} |a-1|^p (|a-t| + 1 - t)^{2-p}
///   p >= 2     :  t (a-1)^2 (|a-t| + 1 - t)^{p-2} >= t^{p/2} |a-1|^p.
[[nodiscard]] Ineq34Result ineq34_check(double a, double t, const PExponent& p);

struct Ineq5Result {
    bool upper_holds = false;
    bool lower_holds = false;
    double upper_constant = 0.0;
    double lower_constant = 0.0;
    double sum_of_powers = 0.0;  // alpha^p + beta^p
    double power_of_sum = 0.0;   // (alpha + beta)^p
};

/// alpha^p + beta^p vs (alpha + beta)^p with the optimal constants per
/// regime: upper 2^{1-p} (0 <= p <= 1) / 1 (p >= 1), lower 1 (0 <= p <= 1)
/// / 2^{1-p} (p >= 1). Tight at alpha = beta and at beta = 0.
/// Requires alpha, beta >= 0 and p >= 0 (plain double; p < 1 is legal here).
[[nodiscard]] Ineq5Result ineq5_check(double alpha, double beta, double p);

struct LindqvistResult {
    bool holds = false;
    double slack = 0.0;     // lhs - rhs of the strengthened convexity bound
    double constant = 0.0;  // c_p used
};

/// Strengthened convexity of t -> |t|^p at second argument b:
///   p >= 2    : |a|^p >= |b|^p + p phi_p(b)(a-b) + c_p |a-b|^p,
///               c_p = 1 / (2^{p-1} - 1);
///   1 < p < 2 : remainder c_p |a-b|^2 / (|a|+|b|)^{2-p},
///               c_p = 3 p (p-1) / 16, remainder 0 when a = b = 0.
[[nodiscard]] LindqvistResult lindqvist_check(double a, double b, const PExponent& p,
                                              double tol = 1e-12);

/// Explicit lower constant for the p >= 2 comparison of the representation
/// lhs against h_{u,1}:
///   c_p = (1/2) min over t in (0, 1/2) of ((1-t)^p - t^p + p t^{p-1}).
/// Always in (0, 1/2]; equals 1/2 at p = 2 (the minimand is identically 1).
/// Bracketed scalar minimization to 1e-12. Requires p >= 2.
[[nodiscard]] double constant_cp(const PExponent& p);

enum class ScanKernel { ineq2, gsr_like };

struct GridSpec {
    double a_min = -10.0;
    double a_max = 10.0;
    double a_step = 1e-2;
    double t_min = 0.0;
    double t_max = 1.0;
    double t_step = 1e-3;
};

struct ScanResult {
    double inf_ratio = 0.0;  // rhs / lhs over included points
    double sup_ratio = 0.0;
    InequalityPoint argmin;
    InequalityPoint argmax;
    std::int64_t points_scanned = 0;
    std::int64_t points_excluded = 0;  // loci where both sides vanish
    GridSpec grid;
};

/// Sweeps the kernel over the grid (plus the special abscissae {0, t, 1} for
/// each t) and reports inf/sup of the rhs-to-lhs ratio with their argument
/// points. Grid points where both sides vanish identically (t = 0 or a = 1)
/// are excluded from the ratio and asserted to be below 1e-14 in magnitude.
[[nodiscard]] ScanResult scan_equivalence(ScanKernel kernel, const PExponent& p,
                                          const GridSpec& grid = {});

/// Calibrated upper constant for the 1 < p <= 2 direction of
/// corollary_bounds_check: sup over the standard grid of lhs / rhs for the
/// gsr_like kernel, widened by 5 percent. Exactly 1 at p = 2 (equality).
[[nodiscard]] double gsr_upper_constant(const PExponent& p);

}  // namespace pgraph
