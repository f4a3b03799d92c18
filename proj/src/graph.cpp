#include "pgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "pgraph/numeric.hpp"

namespace pgraph {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

VertexSet VertexSet::all(int universe_size) {
    VertexSet s(universe_size);
    std::fill(s.flags_.begin(), s.flags_.end(), std::uint8_t{1});
    s.count_ = universe_size;
    return s;
}

VertexSet VertexSet::from_members(int universe_size, std::span<const VertexId> members) {
    VertexSet s(universe_size);
    for (VertexId v : members) s.insert(v);
    return s;
}

void VertexSet::insert(VertexId v) {
    if (v < 0 || v >= universe_size()) fail("VertexSet: id " + std::to_string(v) + " out of range");
    auto& f = flags_[static_cast<std::size_t>(v)];
    if (!f) {
        f = 1;
        ++count_;
    }
}

void VertexSet::erase(VertexId v) {
    if (v < 0 || v >= universe_size()) fail("VertexSet: id " + std::to_string(v) + " out of range");
    auto& f = flags_[static_cast<std::size_t>(v)];
    if (f) {
        f = 0;
        --count_;
    }
}

std::vector<VertexId> VertexSet::members() const {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(count_));
    for (int v = 0; v < universe_size(); ++v)
        if (flags_[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

WeightedGraph::WeightedGraph(std::vector<double> measure, std::vector<double> potential,
                             std::span<const EdgeRecord> edges, std::optional<VertexSet> interior)
    : measure_(std::move(measure)), potential_(std::move(potential)) {
    const int n = static_cast<int>(measure_.size());
    if (potential_.size() != measure_.size())
        fail("graph: potential has " + std::to_string(potential_.size()) + " entries for " +
             std::to_string(n) + " vertices");
    for (int v = 0; v < n; ++v) {
        const double m = measure_[static_cast<std::size_t>(v)];
        if (!(m > 0.0) || !std::isfinite(m))
            fail("graph: measure must be positive and finite at vertex " + std::to_string(v));
        if (!std::isfinite(potential_[static_cast<std::size_t>(v)]))
            fail("graph: potential must be finite at vertex " + std::to_string(v));
    }

    edges_.reserve(edges.size());
    for (const EdgeRecord& e : edges) {
        if (e.x < 0 || e.x >= n || e.y < 0 || e.y >= n)
            fail("graph: edge (" + std::to_string(e.x) + "," + std::to_string(e.y) +
                 ") references a vertex outside 0.." + std::to_string(n - 1));
        if (e.x == e.y) fail("graph: self-loop at vertex " + std::to_string(e.x));
        if (!std::isfinite(e.b) || e.b < 0.0)
            fail("graph: negative or non-finite weight on edge (" + std::to_string(e.x) + "," +
                 std::to_string(e.y) + ")");
        if (e.b == 0.0)
            fail("graph: zero-weight edge record (" + std::to_string(e.x) + "," +
                 std::to_string(e.y) + "); absent edges must be omitted");
        EdgeRecord canon = e;
        if (canon.x > canon.y) std::swap(canon.x, canon.y);
        edges_.push_back(canon);
    }
    std::sort(edges_.begin(), edges_.end(), [](const EdgeRecord& a, const EdgeRecord& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        const EdgeRecord& a = edges_[i - 1];
        const EdgeRecord& b = edges_[i];
        if (a.x == b.x && a.y == b.y) {
            if (a.b != b.b)
                fail("graph: asymmetric duplicate edge (" + std::to_string(a.x) + "," +
                     std::to_string(a.y) + "): weights " + std::to_string(a.b) + " and " +
                     std::to_string(b.b));
            fail("graph: duplicate edge (" + std::to_string(a.x) + "," + std::to_string(a.y) + ")");
        }
    }

    std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
    for (const EdgeRecord& e : edges_) {
        ++counts[static_cast<std::size_t>(e.x) + 1];
        ++counts[static_cast<std::size_t>(e.y) + 1];
    }
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) offsets_[static_cast<std::size_t>(v) + 1] = offsets_[static_cast<std::size_t>(v)] + counts[static_cast<std::size_t>(v) + 1];
    adjacency_.resize(offsets_[static_cast<std::size_t>(n)]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const EdgeRecord& e : edges_) {
        adjacency_[cursor[static_cast<std::size_t>(e.x)]++] = Neighbor{e.y, e.b};
        adjacency_[cursor[static_cast<std::size_t>(e.y)]++] = Neighbor{e.x, e.b};
    }
    for (int v = 0; v < n; ++v) {
        auto begin = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[static_cast<std::size_t>(v)]);
        auto end = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[static_cast<std::size_t>(v) + 1]);
        std::sort(begin, end, [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
    }

    degree_.resize(static_cast<std::size_t>(n));
    TermAccumulator acc;
    for (int v = 0; v < n; ++v) {
        acc = TermAccumulator{};
        for (const Neighbor& nb : neighbors(v)) acc.add(nb.weight);
        degree_[static_cast<std::size_t>(v)] = acc.sum();
    }

    if (interior.has_value()) {
        if (interior->universe_size() != n)
            fail("graph: interior set sized for " + std::to_string(interior->universe_size()) +
                 " vertices, graph has " + std::to_string(n));
        interior_ = std::move(*interior);
    } else {
        interior_ = VertexSet::all(n);
    }
}

std::size_t WeightedGraph::check(VertexId x) const {
    if (x < 0 || x >= vertex_count())
        fail("graph: vertex id " + std::to_string(x) + " out of range 0.." +
             std::to_string(vertex_count() - 1));
    return static_cast<std::size_t>(x);
}

double WeightedGraph::weight(VertexId x, VertexId y) const {
    (void)check(y);
    auto nbrs = neighbors(x);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), y,
                               [](const Neighbor& nb, VertexId id) { return nb.id < id; });
    if (it != nbrs.end() && it->id == y) return it->weight;
    return 0.0;
}

std::span<const Neighbor> WeightedGraph::neighbors(VertexId x) const {
    const std::size_t i = check(x);
    return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

VertexSet WeightedGraph::boundary(const VertexSet& V) const {
    require_subset_universe(*this, V, "boundary");
    VertexSet out(vertex_count());
    for (int y = 0; y < vertex_count(); ++y) {
        if (V.contains(y)) continue;
        for (const Neighbor& nb : neighbors(y)) {
            if (V.contains(nb.id)) {
                out.insert(y);
                break;
            }
        }
    }
    return out;
}

bool WeightedGraph::is_connected(const VertexSet& V) const {
    require_subset_universe(*this, V, "is_connected");
    if (V.count() <= 1) return true;
    const auto members = V.members();
    VertexSet seen(vertex_count());
    std::deque<VertexId> queue{members.front()};
    seen.insert(members.front());
    while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (const Neighbor& nb : neighbors(x)) {
            if (V.contains(nb.id) && !seen.contains(nb.id)) {
                seen.insert(nb.id);
                queue.push_back(nb.id);
            }
        }
    }
    return seen.count() == V.count();
}

void require_function_size(const WeightedGraph& g, const GraphFunction& f, const char* name) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw std::invalid_argument(std::string(name) + ": function has " +
                                    std::to_string(f.size()) + " values for " +
                                    std::to_string(g.vertex_count()) + " vertices");
}

void require_subset_universe(const WeightedGraph& g, const VertexSet& V, const char* name) {
    if (V.universe_size() != g.vertex_count())
        throw std::invalid_argument(std::string(name) + ": subset universe " +
                                    std::to_string(V.universe_size()) + " does not match graph with " +
                                    std::to_string(g.vertex_count()) + " vertices");
}

}  // namespace pgraph
