// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace graphcalc {

/// Position of a vertex in the graph's stable (file) order.
using Vertex = std::size_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/// Immutable finite simple undirected graph.
///
/// Vertex ids are opaque strings; every internal index follows the order in
/// which vertices were declared. Neighbor lists are sorted by that index.
class Graph {
public:
    Graph() = default;

    /// Validates and builds. Throws ValidationError with kind
    /// "duplicate_vertex", "dangling_endpoint", "self_loop" or "duplicate_edge".
    static Graph from_edges(std::vector<std::string> names,
                            const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t vertex_count() const noexcept { return names_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::string& name(Vertex v) const;
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// Throws ValidationError("unknown_vertex") for ids not in the graph.
    Vertex index_of(std::string_view name) const;
    std::optional<Vertex> find(std::string_view name) const;

    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    bool adjacent(Vertex x, Vertex y) const;

    /// Position of y inside neighbors(x), if adjacent.
    std::optional<std::size_t> neighbor_slot(Vertex x, Vertex y) const;

    /// Edges as (x, y) with x < y, ordered by (x, y).
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    void check_vertex(Vertex v) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Parses {"vertices": [...], "edges": [[a, b], ...]}.
/// Malformed JSON or schema violations throw ValidationError("parse_error").
Graph load_graph(std::string_view text);

/// Shortest-path edge count; std::nullopt when x1 is unreachable from x0.
std::optional<std::size_t> graph_distance(const Graph& g, Vertex x0, Vertex x1);

/// All-targets breadth-first distances from a source; unreachable entries are nullopt.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

/// Connectivity of the subgraph induced on `subset`.
bool induces_connected(const Graph& g, std::span<const Vertex> subset);

/// Sum of degrees over A.
double volume(const Graph& g, std::span<const Vertex> subset);

/// Sorts, deduplicates and range-checks a vertex list.
VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> vertices);
VertexSet resolve_names(const Graph& g, const std::vector<std::string>& names);

struct MongeResult {
    double cost = 0.0;
    /// assignment[i] = index into B matched with A[i].
    std::vector<std::size_t> assignment;
};

/// Largest instance solved by permutation enumeration.
inline constexpr std::size_t kMongeMaxSize = 10;

/// Exact optimal transport between two equal-size disjoint vertex sequences
/// under the graph metric. Among optimal permutations the lexicographically
/// smallest is returned.
MongeResult monge_cost(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);

}  // namespace graphcalc
