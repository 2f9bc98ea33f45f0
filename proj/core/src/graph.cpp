// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "graphcalc/error.hpp"

namespace graphcalc {

Graph Graph::from_edges(std::vector<std::string> names,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    g.index_.reserve(names.size());
    for (Vertex v = 0; v < names.size(); ++v) {
        if (!g.index_.emplace(names[v], v).second) {
            throw ValidationError("duplicate_vertex", "vertex \"" + names[v] + "\" declared twice");
        }
    }
    g.names_ = std::move(names);
    g.adjacency_.assign(g.names_.size(), {});

    for (const auto& [a, b] : edges) {
        const auto ia = g.find(a);
        const auto ib = g.find(b);
        if (!ia || !ib) {
            throw ValidationError("dangling_endpoint",
                                  "edge [\"" + a + "\", \"" + b + "\"] references an undeclared vertex");
        }
        if (*ia == *ib) throw ValidationError("self_loop", "self-loop at vertex \"" + a + "\"");
        auto& na = g.adjacency_[*ia];
        if (std::find(na.begin(), na.end(), *ib) != na.end()) {
            throw ValidationError("duplicate_edge", "edge {\"" + a + "\", \"" + b + "\"} listed twice");
        }
        na.push_back(*ib);
        g.adjacency_[*ib].push_back(*ia);
        ++g.edge_count_;
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    return g;
}

const std::string& Graph::name(Vertex v) const {
    check_vertex(v);
    return names_[v];
}

std::optional<Vertex> Graph::find(std::string_view name) const {
    const auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vertex Graph::index_of(std::string_view name) const {
    if (const auto v = find(name)) return *v;
    throw ValidationError("unknown_vertex", "unknown vertex \"" + std::string(name) + "\"");
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
}

bool Graph::adjacent(Vertex x, Vertex y) const { return neighbor_slot(x, y).has_value(); }

std::optional<std::size_t> Graph::neighbor_slot(Vertex x, Vertex y) const {
    const auto nb = neighbors(x);
    const auto it = std::lower_bound(nb.begin(), nb.end(), y);
    if (it == nb.end() || *it != y) return std::nullopt;
    return static_cast<std::size_t>(it - nb.begin());
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex x = 0; x < adjacency_.size(); ++x) {
        for (Vertex y : adjacency_[x]) {
            if (x < y) out.emplace_back(x, y);
        }
    }
    return out;
}

void Graph::check_vertex(Vertex v) const {
    if (v >= names_.size()) {
        throw ValidationError("unknown_vertex", "vertex index " + std::to_string(v) + " out of range");
    }
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source) {
    g.check_vertex(source);
    std::vector<std::optional<std::size_t>> dist(g.vertex_count());
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x)) {
            if (!dist[y]) {
                dist[y] = *dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

std::optional<std::size_t> graph_distance(const Graph& g, Vertex x0, Vertex x1) {
    g.check_vertex(x1);
    return distances_from(g, x0)[x1];
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    const auto dist = distances_from(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

bool induces_connected(const Graph& g, std::span<const Vertex> subset) {
    if (subset.empty()) return true;
    std::vector<bool> member(g.vertex_count(), false);
    for (Vertex v : subset) {
        g.check_vertex(v);
        member[v] = true;
    }
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack{subset.front()};
    seen[subset.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
            if (member[y] && !seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    const auto distinct = static_cast<std::size_t>(std::count(member.begin(), member.end(), true));
    return reached == distinct;
}

double volume(const Graph& g, std::span<const Vertex> subset) {
    double total = 0.0;
    for (Vertex v : subset) total += static_cast<double>(g.degree(v));
    return total;
}

VertexSet make_vertex_set(const Graph& g, std::vector<Vertex> vertices) {
    for (Vertex v : vertices) g.check_vertex(v);
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

VertexSet resolve_names(const Graph& g, const std::vector<std::string>& names) {
    std::vector<Vertex> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(g.index_of(n));
    return make_vertex_set(g, std::move(out));
}

MongeResult monge_cost(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
    if (a.size() != b.size()) {
        throw ValidationError("size_mismatch", "Monge sets must have equal size");
    }
    if (a.size() > kMongeMaxSize) {
        throw ValidationError("size_exceeds_bound",
                              "Monge sets larger than " + std::to_string(kMongeMaxSize) + " are not enumerated");
    }
    for (Vertex x : a) {
        g.check_vertex(x);
        for (Vertex y : b) {
            g.check_vertex(y);
            if (x == y) throw ValidationError("overlap", "Monge sets must be disjoint (\"" + g.name(x) + "\")");
        }
    }

    const std::size_t n = a.size();
    constexpr auto unreachable = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<std::size_t>> cost(n, std::vector<std::size_t>(n, unreachable));
    for (std::size_t i = 0; i < n; ++i) {
        const auto dist = distances_from(g, a[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (dist[b[j]]) cost[i][j] = *dist[b[j]];
        }
    }

    // next_permutation visits permutations in lexicographic order, so keeping
    // only strict improvements yields the lexicographically smallest optimum.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t best = unreachable;
    std::vector<std::size_t> best_perm = perm;
    do {
        std::size_t total = 0;
        for (std::size_t i = 0; i < n && total != unreachable; ++i) {
            total = cost[i][perm[i]] == unreachable ? unreachable : total + cost[i][perm[i]];
        }
        if (total < best) {
            best = total;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (best == unreachable) {
        throw ValidationError("unreachable", "no assignment connects every pair");
    }
    return {static_cast<double>(best), std::move(best_perm)};
}

}  // namespace graphcalc
