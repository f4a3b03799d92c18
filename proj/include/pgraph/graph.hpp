#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pgraph {

using VertexId = int;

/// Real-valued function on the vertex set; length equals vertex count.
using GraphFunction = std::vector<double>;

/// One undirected edge record; orientation of (x, y) is irrelevant.
struct EdgeRecord {
    VertexId x;
    VertexId y;
    double b;
};

struct Neighbor {
    VertexId id;
    double weight;
};

/// Subset of the vertices of a fixed-size graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe_size) : flags_(static_cast<std::size_t>(universe_size), 0) {}

    static VertexSet all(int universe_size);
    static VertexSet from_members(int universe_size, std::span<const VertexId> members);
    static VertexSet from_members(int universe_size, std::initializer_list<VertexId> members) {
        return from_members(universe_size, std::span<const VertexId>(members.begin(), members.size()));
    }

    [[nodiscard]] int universe_size() const { return static_cast<int>(flags_.size()); }
    [[nodiscard]] int count() const { return count_; }
    [[nodiscard]] bool empty() const { return count_ == 0; }
    [[nodiscard]] bool contains(VertexId v) const {
        return v >= 0 && v < universe_size() && flags_[static_cast<std::size_t>(v)] != 0;
    }

    void insert(VertexId v);
    void erase(VertexId v);

    /// Members in ascending id order.
    [[nodiscard]] std::vector<VertexId> members() const;

    bool operator==(const VertexSet& other) const = default;

private:
    std::vector<std::uint8_t> flags_;
    int count_ = 0;
};

/// Locally finite weighted graph with vertex measure and potential:
///   b : symmetric nonnegative edge weights, zero diagonal (stored edges have b > 0),
///   m : strictly positive vertex measure,
///   c : real-valued potential.
/// A designated interior marks the vertices whose full neighborhood the
/// graph carries; operator values are trusted only there. Finite graphs
/// that are their own universe use interior = all vertices (the default).
/// Immutable after construction; adjacency is CSR with ascending neighbor ids.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Validates and freezes the graph. Throws std::invalid_argument on:
    /// non-positive measure, self-loops, non-positive edge weights,
    /// duplicate edge records (conflicting weights get a distinct message),
    /// out-of-range vertex ids.
    WeightedGraph(std::vector<double> measure, std::vector<double> potential,
                  std::span<const EdgeRecord> edges,
                  std::optional<VertexSet> interior = std::nullopt);

    [[nodiscard]] int vertex_count() const { return static_cast<int>(measure_.size()); }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }

    [[nodiscard]] double measure(VertexId x) const { return measure_[check(x)]; }
    [[nodiscard]] double potential(VertexId x) const { return potential_[check(x)]; }

    /// Weighted vertex degree deg(x) = sum of b(x, y) over neighbors.
    [[nodiscard]] double degree(VertexId x) const { return degree_[check(x)]; }

    /// b(x, y); zero when no edge is present. Symmetric.
    [[nodiscard]] double weight(VertexId x, VertexId y) const;

    [[nodiscard]] bool adjacent(VertexId x, VertexId y) const { return weight(x, y) > 0.0; }

    /// Neighbors of x in ascending id order.
    [[nodiscard]] std::span<const Neighbor> neighbors(VertexId x) const;

    /// Undirected edges, canonical x < y, sorted lexicographically.
    [[nodiscard]] std::span<const EdgeRecord> edges() const { return edges_; }

    [[nodiscard]] const VertexSet& interior() const { return interior_; }

    /// Vertices outside V adjacent to V.
    [[nodiscard]] VertexSet boundary(const VertexSet& V) const;

    /// BFS reachability between all members of V using only edges with both
    /// endpoints in V. Empty and singleton sets count as connected.
    [[nodiscard]] bool is_connected(const VertexSet& V) const;

private:
    [[nodiscard]] std::size_t check(VertexId x) const;

    std::vector<double> measure_;
    std::vector<double> potential_;
    std::vector<double> degree_;
    std::vector<EdgeRecord> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adjacency_;
    VertexSet interior_;
};

/// Throws std::invalid_argument unless f has one value per vertex.
void require_function_size(const WeightedGraph& g, const GraphFunction& f, const char* name);

/// Throws std::invalid_argument unless V lives on g's vertex set.
void require_subset_universe(const WeightedGraph& g, const VertexSet& V, const char* name);

}  // namespace pgraph
