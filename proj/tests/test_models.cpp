#include <doctest.h>

#include <cmath>

#include "pgraph/energy.hpp"
#include "pgraph/models.hpp"
#include "pgraph/operators.hpp"

#include "support.hpp"

using namespace pgraph;

TEST_CASE("half-line windows") {
    const models::Window w = models::nat_line(2);
    CHECK(w.graph.vertex_count() == 3);
    CHECK(w.graph.edge_count() == 2);
    CHECK(w.graph.interior().count() == 1);
    CHECK(w.graph.interior().contains(w.locate(1)));
    CHECK(w.graph.degree(w.locate(1)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(w.graph.measure(w.locate(1)) == 1.0);
    CHECK(w.graph.potential(w.locate(1)) == 0.0);

    GraphFunction spike(3, 0.0);
    spike[static_cast<std::size_t>(w.locate(1))] = 1.0;
    CHECK(energy(w.graph, spike, PExponent(3.0)).total == doctest::Approx(2.0).epsilon(1e-15));

    CHECK_THROWS_AS((void)models::nat_line(1), std::invalid_argument);
}

TEST_CASE("symmetric line windows") {
    const models::Window w = models::int_line(1);
    CHECK(w.graph.vertex_count() == 3);
    CHECK(w.graph.interior().count() == 1);
    CHECK(w.graph.interior().contains(w.locate(0)));
    CHECK(w.locate(-1) != w.locate(1));
    CHECK_THROWS_AS((void)w.locate(5), std::invalid_argument);

    const models::Window big = models::int_line(6);
    CHECK(big.graph.vertex_count() == 13);
    CHECK(big.graph.edge_count() == 12);
    CHECK(big.graph.interior().count() == 11);
}

TEST_CASE("grid windows") {
    const models::Window w = models::grid2d(1);
    CHECK(w.graph.vertex_count() == 9);
    CHECK(w.graph.edge_count() == 12);
    CHECK(w.graph.interior().count() == 1);
    CHECK(w.graph.interior().contains(w.locate(models::grid_label(0, 0))));

    const models::Window w3 = models::grid2d(3);
    const int side = 7;
    CHECK(w3.graph.vertex_count() == side * side);
    CHECK(w3.graph.edge_count() == static_cast<std::size_t>(2 * side * (side - 1)));
    CHECK(w3.graph.degree(w3.locate(models::grid_label(0, 0))) ==
          doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("weighted line windows") {
    const double weights[] = {1.0, 2.0, 3.0};
    const models::Window w = models::weighted_line(weights);
    CHECK(w.graph.vertex_count() == 4);
    CHECK(w.graph.edge_count() == 3);
    CHECK(w.graph.weight(w.locate(1), w.locate(2)) == 2.0);
    CHECK_FALSE(w.graph.interior().contains(w.locate(0)));
    CHECK_FALSE(w.graph.interior().contains(w.locate(3)));

    const double bad[] = {1.0, 0.0, 3.0};
    CHECK_THROWS_WITH_AS((void)models::weighted_line(bad), doctest::Contains("disconnect"),
                         std::invalid_argument);
}

TEST_CASE("star and complete graphs") {
    const WeightedGraph s = models::star(5, 0.5);
    CHECK(s.vertex_count() == 6);
    CHECK(s.edge_count() == 5);
    CHECK(s.degree(0) == doctest::Approx(2.5).epsilon(1e-15));
    const WeightedGraph k = models::complete(4);
    CHECK(k.vertex_count() == 4);
    CHECK(k.edge_count() == 6);
}

TEST_CASE("half-line profile values") {
    const PExponent p2(2.0);
    CHECK(models::hardy_u(0, p2) == 0.0);
    CHECK(models::hardy_u(1, p2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(models::hardy_u(4, p2) == doctest::Approx(2.0).epsilon(1e-15));
    for (double p : {1.5, 2.0, 3.0}) {
        double prev = models::hardy_u(0, PExponent(p));
        for (std::int64_t n = 1; n <= 20; ++n) {
            const double cur = models::hardy_u(n, PExponent(p));
            CHECK(cur > prev);
            prev = cur;
        }
    }
    CHECK_THROWS_AS((void)models::hardy_u(-1, p2), std::invalid_argument);
}

TEST_CASE("profile ratio sequence") {
    const PExponent p2(2.0);
    CHECK(models::alpha_seq(1, p2) == 0.0);
    CHECK(models::alpha_seq(2, p2) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK(models::alpha_seq(1000000, p2) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS((void)models::alpha_seq(0, p2), std::invalid_argument);

    SUBCASE("matches the consecutive profile ratio") {
        for (double p : {1.5, 2.0, 3.0}) {
            const PExponent pe(p);
            for (std::int64_t n = 1; n <= 32; ++n) {
                const double ratio = models::hardy_u(n - 1, pe) / models::hardy_u(n, pe);
                CHECK(models::alpha_seq(n, pe) == doctest::Approx(ratio).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("profile is superharmonic on half-line windows") {
    for (double p : {1.5, 2.0, 3.0}) {
        const models::Window w = models::nat_line(12);
        const PExponent pe(p);
        GraphFunction u(static_cast<std::size_t>(w.graph.vertex_count()));
        for (int x = 0; x < w.graph.vertex_count(); ++x)
            u[static_cast<std::size_t>(x)] =
                models::hardy_u(w.labels[static_cast<std::size_t>(x)], pe);
        CHECK(classify(w.graph, u, w.graph.interior(), pe).kind ==
              Harmonicity::superharmonic);
    }
}

TEST_CASE("half-line representation identity display") {
    SUBCASE("hand-evaluated spike at the first interior vertex") {
        const models::Window w = models::nat_line(4);
        GraphFunction phi(static_cast<std::size_t>(w.graph.vertex_count()), 0.0);
        phi[static_cast<std::size_t>(w.locate(1))] = 1.0;
        const models::DisplayCheck d = models::gsr_display_check(4, PExponent(2.0), phi);
        // Energy 2 minus mass (2 - sqrt(2)) * 1 on the one support vertex.
        CHECK(d.lhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
        CHECK(d.rhs == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
        CHECK(d.ratio == doctest::Approx(1.0).epsilon(1e-12));
        CHECK_FALSE(d.degenerate);
    }
    SUBCASE("ratio is one across random functions at p = 2") {
        const int radius = 12;
        const models::Window w = models::nat_line(radius);
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            GraphFunction phi(static_cast<std::size_t>(w.graph.vertex_count()), 0.0);
            SplitMix64 rng(seed + 1);
            for (int lbl = 1; lbl <= radius - 2; ++lbl)
                phi[static_cast<std::size_t>(w.locate(lbl))] = rng.next_in(-1.0, 1.0);
            const models::DisplayCheck d =
                models::gsr_display_check(radius, PExponent(2.0), phi);
            CHECK_FALSE(d.degenerate);
            CHECK(d.ratio == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    SUBCASE("zero function is degenerate") {
        const models::Window w = models::nat_line(6);
        const GraphFunction phi(static_cast<std::size_t>(w.graph.vertex_count()), 0.0);
        CHECK(models::gsr_display_check(6, PExponent(2.0), phi).degenerate);
    }
    SUBCASE("both sides stay positive away from p = 2") {
        const int radius = 10;
        const models::Window w = models::nat_line(radius);
        for (double p : {1.5, 3.0}) {
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                GraphFunction phi(static_cast<std::size_t>(w.graph.vertex_count()), 0.0);
                SplitMix64 rng(50 + seed);
                for (int lbl = 1; lbl <= radius - 2; ++lbl)
                    phi[static_cast<std::size_t>(w.locate(lbl))] = rng.next_in(-1.0, 1.0);
                const models::DisplayCheck d =
                    models::gsr_display_check(radius, PExponent(p), phi);
                CHECK(d.lhs > 0.0);
                CHECK(d.rhs > 0.0);
                CHECK(std::isfinite(d.ratio));
            }
        }
    }
    SUBCASE("support outside the truncated interior is rejected") {
        const models::Window w = models::nat_line(5);
        GraphFunction at_boundary(static_cast<std::size_t>(w.graph.vertex_count()), 0.0);
        at_boundary[static_cast<std::size_t>(w.locate(0))] = 1.0;
        CHECK_THROWS_AS((void)models::gsr_display_check(5, PExponent(2.0), at_boundary),
                        std::invalid_argument);
        GraphFunction at_cut(static_cast<std::size_t>(w.graph.vertex_count()), 0.0);
        at_cut[static_cast<std::size_t>(w.locate(5))] = 1.0;
        CHECK_THROWS_AS((void)models::gsr_display_check(5, PExponent(2.0), at_cut),
                        std::invalid_argument);
        // The last interior vertex must vanish too: truncation is only exact
        // when no edge reaches the window cut with a nonzero value.
        GraphFunction at_last(static_cast<std::size_t>(w.graph.vertex_count()), 0.0);
        at_last[static_cast<std::size_t>(w.locate(4))] = 1.0;
        CHECK_THROWS_AS((void)models::gsr_display_check(5, PExponent(2.0), at_last),
                        std::invalid_argument);
    }
}

TEST_CASE("window growth preserves compactly supported energies") {
    SplitMix64 rng(7);
    double values[3];
    for (double& v : values) v = rng.next_in(-1.0, 1.0);
    auto place = [&](const models::Window& w) {
        GraphFunction phi(static_cast<std::size_t>(w.graph.vertex_count()), 0.0);
        for (int lbl = 1; lbl <= 3; ++lbl)
            phi[static_cast<std::size_t>(w.locate(lbl))] = values[lbl - 1];
        return phi;
    };
    const models::Window small = models::nat_line(5);
    const models::Window large = models::nat_line(9);
    for (double p : {1.5, 2.0, 3.0}) {
        const double e_small = energy(small.graph, place(small), PExponent(p)).total;
        const double e_large = energy(large.graph, place(large), PExponent(p)).total;
        CHECK(e_small == doctest::Approx(e_large).epsilon(1e-14));
    }
}

TEST_CASE("seeded random graphs") {
    models::RandomGraphSpec spec;
    spec.n = 25;
    spec.b_min = 0.2;
    spec.b_max = 0.9;
    spec.m_min = 0.5;
    spec.m_max = 2.0;
    spec.c_min = -0.3;
    spec.c_max = 0.4;
    SUBCASE("respects the requested ranges and stays connected") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const WeightedGraph g = models::random_graph(spec, seed);
            CHECK(g.vertex_count() == spec.n);
            VertexSet all(g.vertex_count());
            for (int x = 0; x < g.vertex_count(); ++x) all.insert(x);
            CHECK(g.is_connected(all));
            for (const EdgeRecord& e : g.edges()) {
                CHECK(e.b > spec.b_min);
                CHECK(e.b <= spec.b_max);
            }
            for (int x = 0; x < g.vertex_count(); ++x) {
                CHECK(g.measure(x) >= spec.m_min);
                CHECK(g.measure(x) < spec.m_max);
                CHECK(g.potential(x) >= spec.c_min);
                CHECK(g.potential(x) < spec.c_max);
            }
        }
    }
    SUBCASE("is deterministic per seed") {
        const WeightedGraph a = models::random_graph(spec, 42);
        const WeightedGraph b = models::random_graph(spec, 42);
        CHECK(a.edge_count() == b.edge_count());
        const auto ae = a.edges();
        const auto be = b.edges();
        for (std::size_t i = 0; i < ae.size(); ++i) {
            CHECK(ae[i].x == be[i].x);
            CHECK(ae[i].y == be[i].y);
            CHECK(ae[i].b == be[i].b);
        }
        for (int x = 0; x < a.vertex_count(); ++x) {
            CHECK(a.measure(x) == b.measure(x));
            CHECK(a.potential(x) == b.potential(x));
        }
        const WeightedGraph c = models::random_graph(spec, 43);
        bool differs = a.edge_count() != c.edge_count();
        if (!differs) {
            const auto ce = c.edges();
            for (std::size_t i = 0; i < ae.size() && !differs; ++i)
                differs = ae[i].b != ce[i].b;
        }
        CHECK(differs);
    }
}
