#include "pgraph/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pgraph/numeric.hpp"

namespace pgraph::models {

VertexId Window::locate(std::int64_t label) const {
    if (index_.empty()) {
        index_.reserve(labels.size());
        for (std::size_t v = 0; v < labels.size(); ++v)
            index_.emplace(labels[v], static_cast<VertexId>(v));
    }
    const auto it = index_.find(label);
    if (it == index_.end())
        throw std::invalid_argument("window: no vertex labelled " + std::to_string(label));
    return it->second;
}

Window nat_line(int radius) {
    if (radius < 2) throw std::invalid_argument("nat_line: radius must be >= 2");
    const int n = radius + 1;
    std::vector<EdgeRecord> edges;
    edges.reserve(static_cast<std::size_t>(radius));
    for (int i = 0; i < radius; ++i) edges.push_back(EdgeRecord{i, i + 1, 1.0});
    VertexSet interior(n);
    for (int i = 1; i < radius; ++i) interior.insert(i);
    Window w;
    w.graph = WeightedGraph(std::vector<double>(static_cast<std::size_t>(n), 1.0),
                            std::vector<double>(static_cast<std::size_t>(n), 0.0), edges,
                            std::move(interior));
    w.labels.resize(static_cast<std::size_t>(n));
    std::iota(w.labels.begin(), w.labels.end(), std::int64_t{0});
    return w;
}

Window int_line(int radius) {
    if (radius < 1) throw std::invalid_argument("int_line: radius must be >= 1");
    const int n = 2 * radius + 1;
    std::vector<EdgeRecord> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) edges.push_back(EdgeRecord{i, i + 1, 1.0});
    VertexSet interior(n);
    for (int i = 1; i + 1 < n; ++i) interior.insert(i);
    Window w;
    w.graph = WeightedGraph(std::vector<double>(static_cast<std::size_t>(n), 1.0),
                            std::vector<double>(static_cast<std::size_t>(n), 0.0), edges,
                            std::move(interior));
    w.labels.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w.labels[static_cast<std::size_t>(i)] = i - radius;
    return w;
}

std::int64_t grid_label(int i, int j) {
    return static_cast<std::int64_t>(i) * 100000 + j;
}

Window grid2d(int radius) {
    if (radius < 1) throw std::invalid_argument("grid2d: radius must be >= 1");
    const int side = 2 * radius + 1;
    const int n = side * side;
    auto id_of = [&](int i, int j) { return (i + radius) * side + (j + radius); };
    std::vector<EdgeRecord> edges;
    edges.reserve(static_cast<std::size_t>(2 * side * (side - 1)));
    for (int i = -radius; i <= radius; ++i) {
        for (int j = -radius; j <= radius; ++j) {
            if (i < radius) edges.push_back(EdgeRecord{id_of(i, j), id_of(i + 1, j), 1.0});
            if (j < radius) edges.push_back(EdgeRecord{id_of(i, j), id_of(i, j + 1), 1.0});
        }
    }
    VertexSet interior(n);
    for (int i = -radius + 1; i <= radius - 1; ++i)
        for (int j = -radius + 1; j <= radius - 1; ++j) interior.insert(id_of(i, j));
    Window w;
    w.graph = WeightedGraph(std::vector<double>(static_cast<std::size_t>(n), 1.0),
                            std::vector<double>(static_cast<std::size_t>(n), 0.0), edges,
                            std::move(interior));
    w.labels.resize(static_cast<std::size_t>(n));
    for (int i = -radius; i <= radius; ++i)
        for (int j = -radius; j <= radius; ++j)
            w.labels[static_cast<std::size_t>(id_of(i, j))] = grid_label(i, j);
    return w;
}

Window weighted_line(std::span<const double> weights) {
    if (weights.empty()) throw std::invalid_argument("weighted_line: needs at least one edge");
    const int n = static_cast<int>(weights.size()) + 1;
    std::vector<EdgeRecord> edges;
    edges.reserve(weights.size());
    for (int i = 0; i + 1 < n; ++i) {
        const double b = weights[static_cast<std::size_t>(i)];
        if (!(b > 0.0))
            throw std::invalid_argument("weighted_line: weight " + std::to_string(b) + " on edge " +
                                        std::to_string(i) + " would disconnect the line");
        edges.push_back(EdgeRecord{i, i + 1, b});
    }
    VertexSet interior(n);
    for (int i = 1; i + 1 < n; ++i) interior.insert(i);
    Window w;
    w.graph = WeightedGraph(std::vector<double>(static_cast<std::size_t>(n), 1.0),
                            std::vector<double>(static_cast<std::size_t>(n), 0.0), edges,
                            std::move(interior));
    w.labels.resize(static_cast<std::size_t>(n));
    std::iota(w.labels.begin(), w.labels.end(), std::int64_t{0});
    return w;
}

WeightedGraph star(int leaves, double weight) {
    if (leaves < 1) throw std::invalid_argument("star: needs at least one leaf");
    const int n = leaves + 1;
    std::vector<EdgeRecord> edges;
    edges.reserve(static_cast<std::size_t>(leaves));
    for (int i = 1; i <= leaves; ++i) edges.push_back(EdgeRecord{0, i, weight});
    return WeightedGraph(std::vector<double>(static_cast<std::size_t>(n), 1.0),
                         std::vector<double>(static_cast<std::size_t>(n), 0.0), edges);
}

WeightedGraph complete(int n, double weight) {
    if (n < 2) throw std::invalid_argument("complete: needs at least two vertices");
    std::vector<EdgeRecord> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back(EdgeRecord{i, j, weight});
    return WeightedGraph(std::vector<double>(static_cast<std::size_t>(n), 1.0),
                         std::vector<double>(static_cast<std::size_t>(n), 0.0), edges);
}

double hardy_u(std::int64_t n, const PExponent& p) {
    if (n < 0) throw std::invalid_argument("hardy_u: n must be >= 0");
    p.require_greater_than_one("hardy_u");
    return std::pow(static_cast<double>(n), (p.value() - 1.0) / p.value());
}

double alpha_seq(std::int64_t n, const PExponent& p) {
    if (n < 1) throw std::invalid_argument("alpha_seq: n must be >= 1");
    p.require_greater_than_one("alpha_seq");
    const double q = p.conjugate();
    return std::pow(1.0 - 1.0 / static_cast<double>(n), 1.0 / q);
}

DisplayCheck gsr_display_check(int radius, const PExponent& p, const GraphFunction& phi) {
    p.require_greater_than_one("gsr_display_check");
    const Window w = nat_line(radius);
    require_function_size(w.graph, phi, "gsr_display_check");
    for (int v = 0; v <= radius; ++v) {
        const bool inner = v >= 1 && v <= radius - 2;
        if (!inner && phi[static_cast<std::size_t>(v)] != 0.0)
            throw std::invalid_argument(
                "gsr_display_check: phi must vanish outside 1.." + std::to_string(radius - 2) +
                "; nonzero at " + std::to_string(v));
    }

    GraphFunction u(static_cast<std::size_t>(radius + 1));
    for (int v = 0; v <= radius; ++v) u[static_cast<std::size_t>(v)] = hardy_u(v, p);

    // Hardy weight from the operator, never from a closed form.
    TermAccumulator lhs;
    for (int v = 1; v < radius; ++v) {
        const std::size_t i = static_cast<std::size_t>(v);
        lhs.add(std::pow(std::abs(phi[i] - phi[i - 1]), p.value()));
        const double wv = p_laplacian(w.graph, u, v, p) / std::pow(u[i], p.value() - 1.0);
        lhs.add(-wv * std::pow(std::abs(phi[i]), p.value()));
    }
    lhs.add(std::pow(std::abs(phi[static_cast<std::size_t>(radius)] -
                              phi[static_cast<std::size_t>(radius - 1)]),
                     p.value()));

    TermAccumulator rhs;
    for (int v = 2; v <= radius; ++v) {
        const std::size_t i = static_cast<std::size_t>(v);
        const double alpha = alpha_seq(v, p);
        const double core = alpha * phi[i] - phi[i - 1];
        if (core == 0.0) {
            rhs.add(0.0);
            continue;
        }
        const double br = std::sqrt(alpha) * std::abs(core) +
                          0.5 * (alpha * std::abs(phi[i]) + std::abs(phi[i - 1])) * (1.0 - alpha);
        rhs.add(std::pow(alpha, 1.0 - p.value()) * core * core * std::pow(br, p.value() - 2.0));
    }

    DisplayCheck out;
    out.lhs = lhs.sum();
    out.rhs = rhs.sum();
    const double noise = 1e-14 * (1.0 + std::abs(out.lhs) + std::abs(out.rhs));
    if (std::abs(out.lhs) <= noise && std::abs(out.rhs) <= noise) {
        out.degenerate = true;
        out.ratio = 0.0;
    } else {
        out.ratio = out.lhs / out.rhs;
    }
    return out;
}

WeightedGraph random_graph(const RandomGraphSpec& spec, std::uint64_t seed) {
    if (spec.n < 2) throw std::invalid_argument("random_graph: n must be >= 2");
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> present(
        static_cast<std::size_t>(spec.n) * static_cast<std::size_t>(spec.n), 0);
    auto mark = [&](int i, int j) {
        present[static_cast<std::size_t>(i) * static_cast<std::size_t>(spec.n) +
                static_cast<std::size_t>(j)] = 1;
        present[static_cast<std::size_t>(j) * static_cast<std::size_t>(spec.n) +
                static_cast<std::size_t>(i)] = 1;
    };
    auto marked = [&](int i, int j) {
        return present[static_cast<std::size_t>(i) * static_cast<std::size_t>(spec.n) +
                       static_cast<std::size_t>(j)] != 0;
    };

    std::vector<EdgeRecord> edges;
    for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j)
            if (rng.next_unit() < spec.edge_prob) {
                // Half-open draw flipped to (b_min, b_max] so weights stay positive.
                edges.push_back(EdgeRecord{i, j, spec.b_max - (spec.b_max - spec.b_min) * rng.next_unit()});
                mark(i, j);
            }
    if (spec.connect) {
        // Random spanning path over a shuffled vertex order.
        std::vector<int> order(static_cast<std::size_t>(spec.n));
        std::iota(order.begin(), order.end(), 0);
        for (int i = spec.n - 1; i > 0; --i)
            std::swap(order[static_cast<std::size_t>(i)],
                      order[static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i + 1)))]);
        for (int i = 0; i + 1 < spec.n; ++i) {
            const int x = order[static_cast<std::size_t>(i)];
            const int y = order[static_cast<std::size_t>(i + 1)];
            if (!marked(x, y)) {
                edges.push_back(
                    EdgeRecord{x, y, spec.b_max - (spec.b_max - spec.b_min) * rng.next_unit()});
                mark(x, y);
            }
        }
    }

    std::vector<double> m(static_cast<std::size_t>(spec.n));
    std::vector<double> c(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i) {
        m[static_cast<std::size_t>(i)] = rng.next_in(spec.m_min, spec.m_max);
        c[static_cast<std::size_t>(i)] = spec.c_min == spec.c_max
                                             ? spec.c_min
                                             : rng.next_in(spec.c_min, spec.c_max);
    }
    return WeightedGraph(std::move(m), std::move(c), edges);
}

GraphFunction random_function(const WeightedGraph& g, const VertexSet& on, double lo, double hi,
                              std::uint64_t seed) {
    require_subset_universe(g, on, "random_function");
    SplitMix64 rng(seed);
    GraphFunction f(static_cast<std::size_t>(g.vertex_count()), 0.0);
    for (int x = 0; x < g.vertex_count(); ++x)
        if (on.contains(x)) f[static_cast<std::size_t>(x)] = rng.next_in(lo, hi);
    return f;
}

}  // namespace pgraph::models
