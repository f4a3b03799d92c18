#include <doctest.h>

#include <cmath>
#include <limits>

#include "pgraph/inequalities.hpp"

#include "support.hpp"

using namespace pgraph;

namespace {

// Coarse grid for property sweeps; the library default stays reserved for the
// calibrated scans.
GridSpec coarse_grid() {
    GridSpec g;
    g.a_step = 0.1;
    g.t_step = 0.01;
    return g;
}

}  // namespace

TEST_CASE("pointwise two-sided comparison") {
    SUBCASE("p = 2 collapses both sides to t (a-1)^2") {
        for (double a = -4.0; a <= 4.0; a += 0.37) {
            for (double t = 0.0; t <= 1.0; t += 0.111) {
                const auto [lhs, rhs] = ineq2_sides(a, t, PExponent(2.0));
                const double expected = t * (a - 1.0) * (a - 1.0);
                CHECK(lhs == doctest::Approx(expected).epsilon(1e-12));
                CHECK(rhs == doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }
    SUBCASE("edges of the t-interval are equalities") {
        for (double p : {1.5, 2.0, 3.0, 4.0}) {
            for (double a : {-2.0, -0.3, 0.0, 0.4, 1.7, 5.0}) {
                const auto [l0, r0] = ineq2_sides(a, 0.0, PExponent(p));
                CHECK(l0 == doctest::Approx(0.0).epsilon(1e-14));
                CHECK(r0 == 0.0);
                const auto [l1, r1] = ineq2_sides(a, 1.0, PExponent(p));
                CHECK(l1 == doctest::Approx(r1).epsilon(1e-12));
            }
        }
    }
    SUBCASE("hand-evaluated point and extended-precision replay") {
        const auto [lhs, rhs] = ineq2_sides(2.0, 0.5, PExponent(3.0));
        CHECK(lhs == doctest::Approx(1.5).epsilon(1e-15));
        CHECK(rhs == doctest::Approx(1.0).epsilon(1e-15));
        const auto wide = detail::ineq2_sides_impl<long double>(2.0L, 0.5L, 3.0L);
        CHECK(lhs == doctest::Approx(static_cast<double>(wide.lhs)).epsilon(1e-14));
        CHECK(rhs == doctest::Approx(static_cast<double>(wide.rhs)).epsilon(1e-14));
    }
    SUBCASE("rejects p = 1 and t outside the interval") {
        CHECK_THROWS_AS((void)ineq2_sides(0.5, 0.5, PExponent(1.0)), std::invalid_argument);
        CHECK_THROWS_AS((void)ineq2_sides(0.5, -0.1, PExponent(2.0)), std::invalid_argument);
        CHECK_THROWS_AS((void)ineq2_sides(0.5, 1.1, PExponent(2.0)), std::invalid_argument);
    }
    SUBCASE("degenerate quadratic factor never produces infinities") {
        // a = t = 1 with 1 < p < 2 would otherwise evaluate 0 * 0^{negative}.
        const auto [lhs, rhs] = ineq2_sides(1.0, 1.0, PExponent(1.5));
        CHECK(std::isfinite(lhs));
        CHECK(rhs == 0.0);
    }
}

TEST_CASE("splitting bound for the bracket") {
    SUBCASE("hand-evaluated parts") {
        const Ineq1Result r = ineq1_check(3.0, 0.25, 2.0);
        CHECK(r.value == doctest::Approx(3.5).epsilon(1e-15));
        CHECK(r.bracket == doctest::Approx(2.5).epsilon(1e-15));
    }
    SUBCASE("sharp constants hold on a sample grid") {
        for (int it = 0; it <= 200; ++it) {
            const double t = static_cast<double>(it) * 5e-3;
            for (int ia = 0; ia <= 400; ++ia) {
                const double a = -10.0 + static_cast<double>(ia) * 5e-2;
                const Ineq1Result up = ineq1_check(a, t, 2.0);
                CHECK(up.upper_holds);
                const Ineq1Result lo = ineq1_check(a, t, 0.5);
                CHECK(lo.lower_holds);
            }
        }
    }
    SUBCASE("upper direction is exactly 2 at t = 0") {
        for (double a : {-3.0, 0.0, 1.0, 7.5}) {
            const Ineq1Result r = ineq1_check(a, 0.0, 2.0);
            CHECK(r.value == doctest::Approx(2.0 * r.bracket).epsilon(1e-15));
            CHECK_FALSE(ineq1_check(a, 0.0, 1.99).upper_holds);
        }
    }
    SUBCASE("lower direction is sharp along the diagonal near one") {
        // value / bracket -> 1/2 as a = t -> 1, so any constant above 1/2
        // fails close enough to the corner.
        const Ineq1Result r = ineq1_check(0.99, 0.99, 0.51);
        CHECK_FALSE(r.lower_holds);
        CHECK(ineq1_check(0.99, 0.99, 0.5).lower_holds);
    }
    SUBCASE("rejects t outside the interval") {
        CHECK_THROWS_AS((void)ineq1_check(0.0, 1.5, 1.0), std::invalid_argument);
    }
}

TEST_CASE("regime power comparisons") {
    SUBCASE("p = 2 is an equality") {
        for (double a = -3.0; a <= 3.0; a += 0.29) {
            for (double t = 0.0; t <= 1.0; t += 0.13) {
                const Ineq34Result r = ineq34_check(a, t, PExponent(2.0));
                CHECK(r.holds);
                CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-12));
            }
        }
    }
    SUBCASE("endpoints of the t-interval are equalities") {
        for (double p : {1.5, 3.0}) {
            for (double a : {-1.5, 0.3, 2.0}) {
                const Ineq34Result r0 = ineq34_check(a, 0.0, PExponent(p));
                CHECK(r0.holds);
                CHECK(r0.lhs == doctest::Approx(r0.rhs).epsilon(1e-12));
                const Ineq34Result r1 = ineq34_check(a, 1.0, PExponent(p));
                CHECK(r1.holds);
                CHECK(r1.lhs == doctest::Approx(r1.rhs).epsilon(1e-12));
            }
        }
    }
    SUBCASE("holds across both regimes on a grid") {
        for (double p : {1.3, 1.5, 2.5, 3.0, 4.0}) {
            for (int ia = 0; ia <= 80; ++ia) {
                const double a = -6.0 + static_cast<double>(ia) * 0.15;
                for (int it = 0; it <= 50; ++it) {
                    const double t = static_cast<double>(it) * 0.02;
                    const Ineq34Result r = ineq34_check(a, t, PExponent(p));
                    CHECK(r.holds);
                }
            }
        }
    }
}

TEST_CASE("sum of powers versus power of sum") {
    SUBCASE("lower constant is tight at equal arguments") {
        const Ineq5Result r = ineq5_check(1.0, 1.0, 2.0);
        CHECK(r.sum_of_powers == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(r.power_of_sum == doctest::Approx(4.0).epsilon(1e-15));
        CHECK(r.lower_constant == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(r.lower_holds);
        CHECK(r.sum_of_powers ==
              doctest::Approx(r.lower_constant * r.power_of_sum).epsilon(1e-15));
        CHECK(r.upper_holds);
    }
    SUBCASE("vanishing second argument is tight on the unit-constant side") {
        for (double p : {0.5, 1.0, 2.0, 3.0}) {
            const Ineq5Result r = ineq5_check(1.7, 0.0, p);
            CHECK(r.upper_holds);
            CHECK(r.lower_holds);
            CHECK(r.sum_of_powers == doctest::Approx(r.power_of_sum).epsilon(1e-14));
        }
    }
    SUBCASE("p = 1 is additive so every comparison is an equality") {
        for (double alpha = 0.0; alpha <= 3.0; alpha += 0.5) {
            for (double beta = 0.0; beta <= 3.0; beta += 0.5) {
                const Ineq5Result r = ineq5_check(alpha, beta, 1.0);
                CHECK(r.upper_constant == 1.0);
                CHECK(r.lower_constant == 1.0);
                CHECK(r.sum_of_powers == doctest::Approx(r.power_of_sum).epsilon(1e-14));
            }
        }
    }
    SUBCASE("concave regime swaps the constants") {
        const Ineq5Result r = ineq5_check(2.0, 2.0, 0.5);
        CHECK(r.upper_constant == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(r.lower_constant == 1.0);
        CHECK(r.upper_holds);
        CHECK(r.lower_holds);
        // Tight at alpha = beta for the upper direction.
        CHECK(r.sum_of_powers ==
              doctest::Approx(r.upper_constant * r.power_of_sum).epsilon(1e-14));
    }
    SUBCASE("holds on a nonnegative grid per regime") {
        for (double p : {0.0, 0.3, 0.7, 1.0, 1.5, 2.0, 3.5}) {
            for (double alpha = 0.0; alpha <= 4.0 + 1e-12; alpha += 0.2) {
                for (double beta = 0.0; beta <= 4.0 + 1e-12; beta += 0.2) {
                    const Ineq5Result r = ineq5_check(alpha, beta, p);
                    CHECK(r.upper_holds);
                    CHECK(r.lower_holds);
                }
            }
        }
    }
    SUBCASE("rejects negative arguments and negative exponents") {
        CHECK_THROWS_AS((void)ineq5_check(-1.0, 0.0, 2.0), std::invalid_argument);
        CHECK_THROWS_AS((void)ineq5_check(0.0, -1.0, 2.0), std::invalid_argument);
        CHECK_THROWS_AS((void)ineq5_check(1.0, 1.0, -0.5), std::invalid_argument);
    }
}

TEST_CASE("strengthened convexity remainder") {
    SUBCASE("coincident arguments give zero slack at p >= 2") {
        for (double p : {2.0, 3.0}) {
            for (double a : {-2.0, 0.0, 1.3}) {
                const LindqvistResult r = lindqvist_check(a, a, PExponent(p));
                CHECK(r.holds);
                CHECK(r.slack == doctest::Approx(0.0).epsilon(1e-14));
            }
        }
    }
    SUBCASE("hand equality at p = 2 from the origin") {
        const LindqvistResult r = lindqvist_check(1.0, 0.0, PExponent(2.0));
        CHECK(r.constant == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(r.holds);
        CHECK(r.slack == doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("explicit constants per regime") {
        CHECK(lindqvist_check(2.0, 1.0, PExponent(3.0)).constant ==
              doctest::Approx(1.0 / 3.0).epsilon(1e-15));
        CHECK(lindqvist_check(2.0, 1.0, PExponent(1.5)).constant ==
              doctest::Approx(3.0 * 1.5 * 0.5 / 16.0).epsilon(1e-15));
    }
    SUBCASE("nonnegative slack across the plane for both regimes") {
        for (double p : {1.5, 3.0}) {
            for (int ia = 0; ia <= 40; ++ia) {
                const double a = -5.0 + static_cast<double>(ia) * 0.25;
                for (int ib = 0; ib <= 40; ++ib) {
                    const double b = -5.0 + static_cast<double>(ib) * 0.25;
                    const LindqvistResult r = lindqvist_check(a, b, PExponent(p));
                    CHECK(r.holds);
                    CHECK(r.slack >= -1e-12);
                }
            }
        }
    }
}

TEST_CASE("explicit lower constant") {
    SUBCASE("p = 2 minimand is identically one") {
        CHECK(constant_cp(PExponent(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("matches an independent scalar minimization at p = 3") {
        auto minimand = [](double t) {
            return std::pow(1.0 - t, 3.0) - std::pow(t, 3.0) + 3.0 * t * t;
        };
        double coarse_best = std::numeric_limits<double>::infinity();
        double coarse_arg = 0.0;
        for (double t = 1e-6; t < 0.5; t += 1e-5) {
            const double v = minimand(t);
            if (v < coarse_best) {
                coarse_best = v;
                coarse_arg = t;
            }
        }
        const double refined = testsupport::golden_min(
            minimand, std::max(1e-12, coarse_arg - 1e-4), std::min(0.5, coarse_arg + 1e-4));
        CHECK(constant_cp(PExponent(3.0)) ==
              doctest::Approx(0.5 * minimand(refined)).epsilon(1e-10));
    }
    SUBCASE("stays in the half-open admissible interval") {
        for (double p : {2.5, 3.0, 4.0}) {
            const double c = constant_cp(PExponent(p));
            CHECK(c > 0.0);
            CHECK(c <= 0.5);
        }
    }
    SUBCASE("rejects p below two") {
        CHECK_THROWS_AS((void)constant_cp(PExponent(1.5)), std::invalid_argument);
    }
}

TEST_CASE("grid scans of the comparison ratio") {
    SUBCASE("p = 2 pins the ratio to one on both kernels") {
        for (ScanKernel k : {ScanKernel::ineq2, ScanKernel::gsr_like}) {
            const ScanResult r = scan_equivalence(k, PExponent(2.0), coarse_grid());
            CHECK(r.inf_ratio == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(r.sup_ratio == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(r.points_scanned > 0);
            CHECK(r.points_excluded > 0);
        }
    }
    SUBCASE("ratio stays positive and finite away from p = 2") {
        for (double p : {1.1, 1.5, 2.5, 3.0, 5.0}) {
            const ScanResult r = scan_equivalence(ScanKernel::ineq2, PExponent(p), coarse_grid());
            CHECK(r.inf_ratio > 0.0);
            CHECK(std::isfinite(r.sup_ratio));
            // t = 1 is an equality locus, so 1 always lies between the bounds.
            CHECK(r.inf_ratio <= 1.0 + 1e-12);
            CHECK(r.sup_ratio >= 1.0 - 1e-12);
            CHECK(r.argmin.t >= 0.0);
            CHECK(r.argmin.t <= 1.0);
            CHECK(r.argmax.t >= 0.0);
            CHECK(r.argmax.t <= 1.0);
        }
    }
    SUBCASE("one-sided kernel stays bounded as well") {
        for (double p : {1.5, 3.0}) {
            const ScanResult r =
                scan_equivalence(ScanKernel::gsr_like, PExponent(p), coarse_grid());
            CHECK(r.inf_ratio > 0.0);
            CHECK(std::isfinite(r.sup_ratio));
        }
    }
    SUBCASE("scans are deterministic") {
        const ScanResult a = scan_equivalence(ScanKernel::ineq2, PExponent(2.5), coarse_grid());
        const ScanResult b = scan_equivalence(ScanKernel::ineq2, PExponent(2.5), coarse_grid());
        CHECK(a.inf_ratio == b.inf_ratio);
        CHECK(a.sup_ratio == b.sup_ratio);
        CHECK(a.argmin.a == b.argmin.a);
        CHECK(a.argmax.a == b.argmax.a);
        CHECK(a.points_scanned == b.points_scanned);
    }
    SUBCASE("calibrated upper constant is exactly one at p = 2") {
        CHECK(gsr_upper_constant(PExponent(2.0)) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(gsr_upper_constant(PExponent(1.5)) > 1.0);
    }
}
