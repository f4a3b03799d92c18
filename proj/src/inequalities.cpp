#include "pgraph/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgraph {

std::pair<double, double> ineq2_sides(double a, double t, const PExponent& p) {
    p.require_greater_than_one("ineq2_sides (the comparison is false at p = 1)");
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("ineq2_sides: t must lie in [0,1], got " + std::to_string(t));
    const auto s = detail::ineq2_sides_impl<double>(a, t, p.value());
    return {s.lhs, s.rhs};
}

Ineq1Result ineq1_check(double a, double t, double C) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("ineq1_check: t must lie in [0,1], got " + std::to_string(t));
    Ineq1Result r;
    r.value = std::abs(a - t) + 1.0 - t;
    r.bracket = std::sqrt(t) * std::abs(a - 1.0) + (1.0 - t) * (std::abs(a) + 1.0) / 2.0;
    const double tol = 1e-15 * (1.0 + r.value + std::abs(C) * r.bracket);
    r.upper_holds = r.value <= C * r.bracket + tol;
    r.lower_holds = r.value >= C * r.bracket - tol;
    return r;
}

Ineq34Result ineq34_check(double a, double t, const PExponent& p) {
    p.require_greater_than_one("ineq34_check");
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("ineq34_check: t must lie in [0,1], got " + std::to_string(t));
    Ineq34Result r;
    const double d2 = (a - 1.0) * (a - 1.0);
    const double dp = std::pow(std::abs(a - 1.0), p.value());
    const double base = std::abs(a - t) + 1.0 - t;
    if (p.value() <= 2.0) {
        r.lhs = t * d2;
        r.rhs = (t == 0.0 || d2 == 0.0) ? 0.0
                                        : std::pow(t, p.value() / 2.0) * dp *
                                              std::pow(base, 2.0 - p.value());
        const double tol = 1e-12 * (1.0 + r.lhs + r.rhs);
        r.holds = r.lhs <= r.rhs + tol;
    } else {
        r.lhs = (t == 0.0 || d2 == 0.0) ? 0.0 : t * d2 * std::pow(base, p.value() - 2.0);
        r.rhs = (t == 0.0 || d2 == 0.0) ? 0.0 : std::pow(t, p.value() / 2.0) * dp;
        const double tol = 1e-12 * (1.0 + r.lhs + r.rhs);
        r.holds = r.lhs >= r.rhs - tol;
    }
    return r;
}

Ineq5Result ineq5_check(double alpha, double beta, double p) {
    if (!(alpha >= 0.0) || !(beta >= 0.0))
        throw std::invalid_argument("ineq5_check: alpha and beta must be >= 0");
    if (!(p >= 0.0) || !std::isfinite(p))
        throw std::invalid_argument("ineq5_check: p must be finite and >= 0");
    Ineq5Result r;
    r.sum_of_powers = std::pow(alpha, p) + std::pow(beta, p);
    r.power_of_sum = std::pow(alpha + beta, p);
    const double two = std::pow(2.0, 1.0 - p);
    r.upper_constant = p <= 1.0 ? two : 1.0;
    r.lower_constant = p <= 1.0 ? 1.0 : two;
    const double tol = 1e-12 * (1.0 + r.sum_of_powers + r.power_of_sum);
    r.upper_holds = r.sum_of_powers <= r.upper_constant * r.power_of_sum + tol;
    r.lower_holds = r.sum_of_powers >= r.lower_constant * r.power_of_sum - tol;
    return r;
}

LindqvistResult lindqvist_check(double a, double b, const PExponent& p, double tol) {
    p.require_greater_than_one("lindqvist_check");
    LindqvistResult r;
    const double pv = p.value();
    const double base = std::pow(std::abs(a), pv) - std::pow(std::abs(b), pv) -
                        pv * phi_p(b, p) * (a - b);
    if (pv >= 2.0) {
        r.constant = 1.0 / (std::pow(2.0, pv - 1.0) - 1.0);
        r.slack = base - r.constant * std::pow(std::abs(a - b), pv);
    } else {
        r.constant = 3.0 * pv * (pv - 1.0) / 16.0;
        const double num = (a - b) * (a - b);
        const double den = std::abs(a) + std::abs(b);
        const double remainder = num == 0.0 ? 0.0 : r.constant * num / std::pow(den, 2.0 - pv);
        r.slack = base - remainder;
    }
    const double scale = 1.0 + std::pow(std::abs(a), pv) + std::pow(std::abs(b), pv);
    r.holds = r.slack >= -tol * scale;
    return r;
}

namespace {

double cp_minimand(double t, double pv) {
    return std::pow(1.0 - t, pv) - std::pow(t, pv) + pv * std::pow(t, pv - 1.0);
}

}  // namespace

double constant_cp(const PExponent& p) {
    const double pv = p.value();
    if (pv < 2.0)
        throw std::invalid_argument("constant_cp is defined for p >= 2, got " + std::to_string(pv));

    // Dense grid locates the best bracket; golden-section refines it to 1e-12.
    // The minimand is smooth on (0, 1/2] and constant (= 1) at p = 2.
    const int cells = 4096;
    const double lo = 1e-9;
    const double hi = 0.5;
    double best_t = lo;
    double best_v = cp_minimand(lo, pv);
    for (int i = 1; i <= cells; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / cells;
        const double v = cp_minimand(t, pv);
        if (v < best_v) {
            best_v = v;
            best_t = t;
        }
    }
    double a = std::max(lo, best_t - (hi - lo) / cells);
    double b = std::min(hi, best_t + (hi - lo) / cells);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = cp_minimand(x1, pv);
    double f2 = cp_minimand(x2, pv);
    while (b - a > 1e-12) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = cp_minimand(x1, pv);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = cp_minimand(x2, pv);
        }
    }
    const double minimum = std::min({best_v, f1, f2});
    return 0.5 * minimum;
}

namespace {

detail::Sides<double> eval_kernel(ScanKernel kernel, double a, double t, double pv) {
    return kernel == ScanKernel::ineq2 ? detail::ineq2_sides_impl<double>(a, t, pv)
                                       : detail::gsr_like_sides_impl<double>(a, t, pv);
}

}  // namespace

ScanResult scan_equivalence(ScanKernel kernel, const PExponent& p, const GridSpec& grid) {
    p.require_greater_than_one("scan_equivalence");
    const double pv = p.value();
    ScanResult out;
    out.grid = grid;
    out.inf_ratio = std::numeric_limits<double>::infinity();
    out.sup_ratio = -std::numeric_limits<double>::infinity();

    const auto n_a = static_cast<std::int64_t>(std::floor((grid.a_max - grid.a_min) / grid.a_step + 0.5));
    const auto n_t = static_cast<std::int64_t>(std::floor((grid.t_max - grid.t_min) / grid.t_step + 0.5));

    auto visit = [&](double a, double t) {
        ++out.points_scanned;
        // Loci where both sides vanish identically: excluded from ratios,
        // required to be numerically dead. The tolerance window also catches
        // grid abscissae that land within float noise of the loci (stepping
        // -10 by 0.01 reaches 1 only up to ~2e-15), where cancellation in the
        // lhs would otherwise produce garbage ratios.
        if (t <= 1e-12 || std::abs(a - 1.0) <= 1e-9) {
            const auto s = eval_kernel(kernel, a, t, pv);
            if (std::abs(s.lhs) > 1e-14 || std::abs(s.rhs) > 1e-14)
                throw std::logic_error("scan_equivalence: degenerate locus not numerically zero at a=" +
                                       std::to_string(a) + " t=" + std::to_string(t));
            ++out.points_excluded;
            return;
        }
        const auto s = eval_kernel(kernel, a, t, pv);
        const double ratio = s.rhs / s.lhs;
        if (ratio < out.inf_ratio) {
            out.inf_ratio = ratio;
            out.argmin = InequalityPoint{a, t};
        }
        if (ratio > out.sup_ratio) {
            out.sup_ratio = ratio;
            out.argmax = InequalityPoint{a, t};
        }
    };

    for (std::int64_t i = 0; i <= n_t; ++i) {
        const double t = grid.t_min + static_cast<double>(i) * grid.t_step;
        for (std::int64_t j = 0; j <= n_a; ++j) visit(grid.a_min + static_cast<double>(j) * grid.a_step, t);
        visit(0.0, t);
        visit(t, t);
        visit(1.0, t);
    }
    return out;
}

double gsr_upper_constant(const PExponent& p) {
    p.require_greater_than_one("gsr_upper_constant");
    if (p.value() > 2.0)
        throw std::invalid_argument("gsr_upper_constant covers 1 < p <= 2, got " +
                                    std::to_string(p.value()));
    if (p.value() == 2.0) return 1.0;
    const ScanResult scan = scan_equivalence(ScanKernel::gsr_like, p);
    // Scan ratios are rhs/lhs; the upper constant bounds lhs by rhs.
    return 1.05 / scan.inf_ratio;
}

}  // namespace pgraph
