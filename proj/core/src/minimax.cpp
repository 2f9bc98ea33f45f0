// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/minimax.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <queue>

#include "graphcalc/error.hpp"

namespace graphcalc {

std::string to_string(PointKind kind) {
    switch (kind) {
        case PointKind::strict_local_min: return "strict_local_min";
        case PointKind::local_min: return "local_min";
        case PointKind::strict_local_max: return "strict_local_max";
        case PointKind::local_max: return "local_max";
        case PointKind::minimax_point: return "minimax_point";
        case PointKind::regular: return "regular";
    }
    return "regular";
}

bool VertexClassification::has(PointKind kind) const {
    return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

namespace {

// Induced neighborhood graph of x on local indices 0..d-1.
struct Neighborhood {
    std::vector<Vertex> vertices;
    std::vector<std::vector<std::size_t>> adj;

    Neighborhood(const Graph& g, Vertex x) {
        const auto nb = g.neighbors(x);
        vertices.assign(nb.begin(), nb.end());
        adj.resize(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            for (std::size_t j = 0; j < vertices.size(); ++j) {
                if (i != j && g.adjacent(vertices[i], vertices[j])) adj[i].push_back(j);
            }
        }
    }

    bool connected() const {
        if (vertices.empty()) return true;
        std::vector<bool> seen(vertices.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t u : adj[v]) {
                if (!seen[u]) {
                    seen[u] = true;
                    ++count;
                    stack.push_back(u);
                }
            }
        }
        return count == vertices.size();
    }
};

struct ArcSearch {
    const Neighborhood& nb;
    std::vector<double> values;  // f on the neighborhood
    double level;                // f(x)
    std::size_t target = 0;
    std::vector<bool> used;
    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;

    std::optional<std::size_t> dip(const std::vector<std::size_t>& arc) const {
        for (std::size_t k = 1; k + 1 < arc.size(); ++k) {
            if (values[arc[k]] <= level) return arc[k];
        }
        return std::nullopt;
    }

    // Hamiltonian completion: the unused vertices must form a path from the
    // source to the target.
    bool complete(std::size_t remaining) {
        const std::size_t v = minus.back();
        for (std::size_t u : nb.adj[v]) {
            if (u == target) {
                if (remaining == 0 && minus.size() >= 2) {
                    minus.push_back(u);
                    if (dip(minus)) return true;
                    minus.pop_back();
                }
                continue;
            }
            if (used[u]) continue;
            used[u] = true;
            minus.push_back(u);
            if (complete(remaining - 1)) return true;
            minus.pop_back();
            used[u] = false;
        }
        return false;
    }

    bool extend_plus() {
        const std::size_t v = plus.back();
        for (std::size_t u : nb.adj[v]) {
            if (u == target) {
                if (plus.size() < 2) continue;
                plus.push_back(u);
                if (dip(plus)) {
                    const std::size_t remaining =
                        static_cast<std::size_t>(std::count(used.begin(), used.end(), false));
                    minus.assign(1, plus.front());
                    if (remaining > 0 && complete(remaining)) return true;
                }
                plus.pop_back();
                continue;
            }
            if (used[u]) continue;
            used[u] = true;
            plus.push_back(u);
            if (extend_plus()) return true;
            plus.pop_back();
            used[u] = false;
        }
        return false;
    }
};

}  // namespace

VertexClassification classify_vertex(const Graph& g, const VertexFunction& f, Vertex x) {
    g.check_vertex(x);
    const double fx = f.at(x);
    VertexClassification out;
    out.vertex = x;

    bool ge = true, gt = true, le = true, lt = true;
    for (Vertex y : g.neighbors(x)) {
        const double fy = f.at(y);
        ge = ge && fy >= fx;
        gt = gt && fy > fx;
        le = le && fy <= fx;
        lt = lt && fy < fx;
    }
    if (gt) out.kinds.push_back(PointKind::strict_local_min);
    if (ge) out.kinds.push_back(PointKind::local_min);
    if (lt) out.kinds.push_back(PointKind::strict_local_max);
    if (le) out.kinds.push_back(PointKind::local_max);

    const Neighborhood nb(g, x);
    const std::size_t d = nb.vertices.size();
    if (d < 4) {
        out.minimax_note = "degree " + std::to_string(d) + " < 4";
    } else if (!nb.connected()) {
        out.minimax_note = "neighborhood is not connected";
    } else if (d > kMaxMinimaxDegree) {
        throw ValidationError("degree_exceeds_bound", "mini-max arc enumeration is limited to degree " +
                                                          std::to_string(kMaxMinimaxDegree) + "; \"" +
                                                          g.name(x) + "\" has degree " + std::to_string(d));
    } else {
        out.minimax_tested = true;
        ArcSearch search{nb, {}, fx, 0, {}, {}, {}};
        for (Vertex y : nb.vertices) search.values.push_back(f.at(y));
        for (std::size_t a = 0; a < d && !out.witness; ++a) {
            if (search.values[a] < fx) continue;
            for (std::size_t b = a + 1; b < d && !out.witness; ++b) {
                if (search.values[b] < fx) continue;
                search.target = b;
                search.used.assign(d, false);
                search.used[a] = true;
                search.used[b] = true;
                search.plus.assign(1, a);
                if (search.extend_plus()) {
                    MinimaxWitness w;
                    w.x0 = nb.vertices[a];
                    w.x1 = nb.vertices[b];
                    w.y0 = nb.vertices[*search.dip(search.plus)];
                    w.y1 = nb.vertices[*search.dip(search.minus)];
                    for (std::size_t k : search.plus) w.arc_plus.push_back(nb.vertices[k]);
                    for (std::size_t k : search.minus) w.arc_minus.push_back(nb.vertices[k]);
                    out.witness = std::move(w);
                }
            }
        }
        if (out.witness) out.kinds.push_back(PointKind::minimax_point);
    }
    if (out.kinds.empty()) out.kinds.push_back(PointKind::regular);
    std::sort(out.kinds.begin(), out.kinds.end());
    return out;
}

namespace {

std::vector<double> values_on_all(const Graph& g, const VertexFunction& f) {
    std::vector<double> v(g.vertex_count());
    for (Vertex x = 0; x < v.size(); ++x) v[x] = f.at(x);
    return v;
}

// Shortest path from `from` to `to` inside {v : allowed[v]}, lexicographically
// smallest among shortest ones.
std::vector<Vertex> lex_shortest_path(const Graph& g, const std::vector<bool>& allowed, Vertex from, Vertex to) {
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.vertex_count(), unset);
    std::deque<Vertex> queue{to};
    dist[to] = 0;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : g.neighbors(v)) {
            if (allowed[u] && dist[u] == unset) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    if (dist[from] == unset) return {};
    std::vector<Vertex> path{from};
    while (path.back() != to) {
        for (Vertex u : g.neighbors(path.back())) {
            if (dist[u] != unset && dist[u] + 1 == dist[path.back()]) {
                path.push_back(u);
                break;
            }
        }
    }
    return path;
}

}  // namespace

BottleneckResult bottleneck_level(const Graph& g, const VertexFunction& f, Vertex z0, Vertex z1) {
    g.check_vertex(z0);
    g.check_vertex(z1);
    const auto v = values_on_all(g, f);
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> best(g.vertex_count(), inf);
    std::vector<bool> done(g.vertex_count(), false);
    using Item = std::pair<double, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    best[z0] = v[z0];
    heap.push({best[z0], z0});
    while (!heap.empty()) {
        const auto [level, x] = heap.top();
        heap.pop();
        if (done[x]) continue;
        done[x] = true;
        if (x == z1) break;
        for (Vertex y : g.neighbors(x)) {
            const double through = std::max(level, v[y]);
            if (through < best[y]) {
                best[y] = through;
                heap.push({through, y});
            }
        }
    }
    if (!done[z1]) {
        throw ValidationError("unreachable", "\"" + g.name(z1) + "\" is unreachable from \"" + g.name(z0) + "\"");
    }
    BottleneckResult r;
    r.c = best[z1];
    std::vector<bool> allowed(g.vertex_count());
    for (Vertex x = 0; x < allowed.size(); ++x) allowed[x] = v[x] <= r.c;
    r.path = lex_shortest_path(g, allowed, z0, z1);
    return r;
}

namespace {

// Tries to replace path[i] by a detour from some path[a] (a < i) to some
// path[b] (b > i), both adjacent to path[i], through off-path neighbors of
// path[i] strictly below c.
bool reroute(const Graph& g, const std::vector<double>& v, double c, std::vector<Vertex>& path, std::size_t i) {
    const Vertex z = path[i];
    std::vector<bool> on_path(g.vertex_count(), false);
    for (Vertex p : path) on_path[p] = true;
    std::vector<std::size_t> position(g.vertex_count(), path.size());
    for (std::size_t k = 0; k < path.size(); ++k) position[path[k]] = k;

    std::vector<bool> corridor(g.vertex_count(), false);
    for (Vertex y : g.neighbors(z)) corridor[y] = !on_path[y] && v[y] < c;

    for (std::size_t a = 0; a < i; ++a) {
        if (!g.adjacent(z, path[a])) continue;
        // BFS from path[a] through the corridor; targets are later path vertices adjacent to z.
        std::vector<Vertex> parent(g.vertex_count(), g.vertex_count());
        std::deque<Vertex> queue{path[a]};
        parent[path[a]] = path[a];
        std::size_t best_b = 0;
        Vertex best_end = 0;
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (on_path[y] && position[y] > i && g.adjacent(z, y) && position[y] > best_b) {
                    best_b = position[y];
                    best_end = x;
                }
                if (corridor[y] && parent[y] == g.vertex_count()) {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if (best_b == 0) continue;
        std::vector<Vertex> detour;
        for (Vertex x = best_end; x != path[a]; x = parent[x]) detour.push_back(x);
        std::reverse(detour.begin(), detour.end());
        std::vector<Vertex> spliced(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(a) + 1);
        spliced.insert(spliced.end(), detour.begin(), detour.end());
        spliced.insert(spliced.end(), path.begin() + static_cast<std::ptrdiff_t>(best_b), path.end());
        path = std::move(spliced);
        return true;
    }
    return false;
}

}  // namespace

MinimaxSearch find_minimax(const Graph& g, const VertexFunction& f, Vertex z0, Vertex z1) {
    g.check_vertex(z0);
    g.check_vertex(z1);
    if (z0 == z1) throw ValidationError("same_endpoints", "mini-max search needs two distinct minima");
    for (Vertex z : {z0, z1}) {
        for (Vertex y : g.neighbors(z)) {
            if (!(f.at(y) > f.at(z))) {
                throw ValidationError("not_strict_minimum", "\"" + g.name(z) + "\" is not a strict local minimum");
            }
        }
    }
    const auto v = values_on_all(g, f);
    const auto bottleneck = bottleneck_level(g, f, z0, z1);

    MinimaxSearch out;
    out.c = bottleneck.c;
    out.path = bottleneck.path;
    bool found = false;
    while (!found) {
        bool spliced = false;
        for (std::size_t i = 1; i + 1 < out.path.size(); ++i) {
            if (v[out.path[i]] != out.c) continue;
            if (reroute(g, v, out.c, out.path, i)) {
                spliced = true;
                break;
            }
            out.z = out.path[i];
            found = true;
            break;
        }
        if (!found && !spliced) {
            throw NumericalError("no_level_vertex", "bottleneck path lost its level-c vertices");
        }
    }

    std::vector<bool> on_path(g.vertex_count(), false);
    for (Vertex p : out.path) on_path[p] = true;
    for (Vertex y : g.neighbors(out.z)) {
        if (!on_path[y] && v[y] < out.c) out.low_neighbors.push_back(y);
    }
    if (g.degree(out.z) < 4) {
        out.warnings.push_back("degree of \"" + g.name(out.z) + "\" is " + std::to_string(g.degree(out.z)) + " < 4");
    }
    if (!induces_connected(g, g.neighbors(out.z))) {
        out.warnings.push_back("neighborhood of \"" + g.name(out.z) + "\" is not connected");
    }
    if (!out.low_neighbors.empty()) {
        out.warnings.push_back("\"" + g.name(out.z) + "\" has off-path neighbors below c");
    }
    try {
        const auto cls = classify_vertex(g, f, out.z);
        if (!cls.minimax_tested) {
            out.classifier_verdict = "undetermined: " + cls.minimax_note;
        } else {
            out.classifier_verdict = cls.has(PointKind::minimax_point) ? "minimax_point" : "not_minimax";
        }
    } catch (const ValidationError& e) {
        out.classifier_verdict = std::string("undetermined: ") + e.what();
    }
    return out;
}

bool is_coercive_on_window(const VertexFunction& f, const SubgraphWindow& w, std::optional<double> level) {
    if (w.boundary().empty()) return false;
    double threshold = -std::numeric_limits<double>::infinity();
    if (level) {
        threshold = *level;
    } else {
        for (Vertex x : w.interior()) threshold = std::max(threshold, f.at(x));
    }
    for (Vertex z : w.boundary()) {
        if (!(f.at(z) > threshold)) return false;
    }
    return true;
}

}  // namespace graphcalc
