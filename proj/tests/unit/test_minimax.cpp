// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "graphcalc/error.hpp"
#include "graphcalc/minimax.hpp"
#include "oracles.hpp"

using namespace graphcalc;

namespace {

template <class Fn>
std::string validation_kind(Fn&& fn) {
    try {
        fn();
    } catch (const ValidationError& e) {
        return e.kind();
    }
    return "";
}

VertexFunction octahedron_saddle(const Graph& g) {
    return VertexFunction::on_all(g, {0, 0, 1, 1, 1, 1});
}

bool is_strict_min(const Graph& g, const std::vector<double>& f, Vertex x) {
    for (Vertex y : g.neighbors(x)) {
        if (f[y] <= f[x]) return false;
    }
    return true;
}

bool is_path(const Graph& g, const std::vector<Vertex>& path, Vertex from, Vertex to) {
    if (path.empty() || path.front() != from || path.back() != to) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!g.adjacent(path[i], path[i + 1])) return false;
    }
    return true;
}

}  // namespace

TEST(Classify, OctahedronSaddle) {
    const Graph g = fixtures::octahedron();
    const auto f = octahedron_saddle(g);
    const auto c = classify_vertex(g, f, g.index_of("e2"));
    EXPECT_TRUE(c.minimax_tested);
    ASSERT_TRUE(c.has(PointKind::minimax_point));
    ASSERT_TRUE(c.witness.has_value());
    EXPECT_EQ(c.witness->x0, g.index_of("e3"));
    EXPECT_EQ(c.witness->x1, g.index_of("-e3"));
    EXPECT_EQ(c.witness->y0, g.index_of("e1"));
    EXPECT_EQ(c.witness->y1, g.index_of("-e1"));
    // The two arcs partition N(x).
    std::vector<Vertex> covered(c.witness->arc_plus);
    covered.insert(covered.end(), c.witness->arc_minus.begin() + 1, c.witness->arc_minus.end() - 1);
    std::sort(covered.begin(), covered.end());
    const auto nb = g.neighbors(g.index_of("e2"));
    EXPECT_EQ(covered, std::vector<Vertex>(nb.begin(), nb.end()));
    EXPECT_FALSE(c.has(PointKind::local_min));
    EXPECT_TRUE(c.has(PointKind::local_max));
    EXPECT_FALSE(c.has(PointKind::strict_local_max));
}

TEST(Classify, ExtremaFromSigns) {
    const Graph p3 = fixtures::p3();
    const auto c = classify_vertex(p3, VertexFunction::on_all(p3, {1, 0, 1}), 1);
    EXPECT_TRUE(c.has(PointKind::strict_local_min));
    EXPECT_TRUE(c.has(PointKind::local_min));
    EXPECT_FALSE(c.minimax_tested);
    EXPECT_FALSE(c.minimax_note.empty());

    const auto flat = classify_vertex(p3, VertexFunction::on_all(p3, {2, 2, 2}), 1);
    EXPECT_TRUE(flat.has(PointKind::local_min));
    EXPECT_TRUE(flat.has(PointKind::local_max));
    EXPECT_FALSE(flat.has(PointKind::strict_local_min));
    EXPECT_FALSE(flat.has(PointKind::strict_local_max));

    const auto slope = classify_vertex(p3, VertexFunction::on_all(p3, {0, 1, 2}), 1);
    EXPECT_EQ(slope.kinds, (std::vector<PointKind>{PointKind::regular}));
    EXPECT_EQ(to_string(PointKind::minimax_point), "minimax_point");
}

TEST(Classify, MinimumIsNotMinimax) {
    const Graph g = fixtures::octahedron();
    const auto c = classify_vertex(g, octahedron_saddle(g), g.index_of("e1"));
    EXPECT_TRUE(c.has(PointKind::strict_local_min));
    EXPECT_TRUE(c.minimax_tested);
    EXPECT_FALSE(c.has(PointKind::minimax_point));
}

TEST(Classify, DegreeBound) {
    std::vector<std::string> names{"hub"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < 13; ++i) {
        names.push_back("l" + std::to_string(i));
        edges.emplace_back("hub", names.back());
        if (i > 0) edges.emplace_back(names[names.size() - 2], names.back());
    }
    const Graph g = Graph::from_edges(names, edges);
    std::vector<double> v(g.vertex_count(), 1.0);
    v[0] = 0.5;
    const auto f = VertexFunction::on_all(g, v);
    EXPECT_EQ(validation_kind([&] { classify_vertex(g, f, 0); }), "degree_exceeds_bound");
}

TEST(Bottleneck, Examples) {
    const Graph c4 = fixtures::c4();
    const auto f = VertexFunction::on_all(c4, {0, 3, 0, 5});
    const auto r = bottleneck_level(c4, f, c4.index_of("1"), c4.index_of("3"));
    EXPECT_EQ(r.c, 3.0);
    EXPECT_EQ(r.path, resolve_names(c4, {"1", "2", "3"}));
    const auto self = bottleneck_level(c4, f, 3, 3);
    EXPECT_EQ(self.c, 5.0);
    EXPECT_EQ(self.path, (std::vector<Vertex>{3}));

    const Graph p5 = fixtures::p5();
    const auto rp = bottleneck_level(p5, VertexFunction::on_all(p5, {0, 5, 1, 3, 0}), 0, 4);
    EXPECT_EQ(rp.c, 5.0);
    EXPECT_EQ(rp.path, (std::vector<Vertex>{0, 1, 2, 3, 4}));

    const Graph split = Graph::from_edges({"a", "b", "c"}, {{"a", "b"}});
    EXPECT_EQ(validation_kind([&] { bottleneck_level(split, VertexFunction::on_all(split, {0, 0, 0}), 0, 2); }),
              "unreachable");
}

TEST(Bottleneck, TieBreakShortestThenLexicographic) {
    // Two optimal routes 1-2-3 and 1-4-3 at equal level; the smaller index wins.
    const Graph c4 = fixtures::c4();
    const auto r = bottleneck_level(c4, VertexFunction::on_all(c4, {0, 1, 0, 1}), 0, 2);
    EXPECT_EQ(r.path, (std::vector<Vertex>{0, 1, 2}));
}

TEST(Bottleneck, MatchesSimplePathEnumeration) {
    Rng rng(1001);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.below(9);
        const Graph g = fixtures::random_connected(rng, n, 0.3);
        std::vector<double> v(n);
        for (double& x : v) x = std::floor(rng.uniform(0, 6));  // integer levels force ties
        const auto f = VertexFunction::on_all(g, v);
        const Vertex z0 = rng.below(n), z1 = rng.below(n);
        const auto r = bottleneck_level(g, f, z0, z1);
        EXPECT_EQ(r.c, oracle::bottleneck_brute(g, v, z0, z1));
        EXPECT_TRUE(is_path(g, r.path, z0, z1));
        double level = -1e300;
        for (Vertex x : r.path) level = std::max(level, v[x]);
        EXPECT_EQ(level, r.c);
        EXPECT_GE(r.c, std::max(v[z0], v[z1]));

        // Shift and monotonicity.
        std::vector<double> shifted(v), raised(v);
        for (double& x : shifted) x += 2.5;
        for (double& x : raised) x += std::floor(rng.uniform(0, 2));
        EXPECT_EQ(bottleneck_level(g, VertexFunction::on_all(g, shifted), z0, z1).c, r.c + 2.5);
        EXPECT_GE(bottleneck_level(g, VertexFunction::on_all(g, raised), z0, z1).c, r.c);
    }
}

TEST(FindMinimax, Octahedron) {
    const Graph g = fixtures::octahedron();
    const auto f = octahedron_saddle(g);
    const auto r = find_minimax(g, f, g.index_of("e1"), g.index_of("-e1"));
    EXPECT_EQ(r.c, 1.0);
    EXPECT_EQ(f.at(r.z), 1.0);
    EXPECT_NE(r.z, g.index_of("e1"));
    EXPECT_NE(r.z, g.index_of("-e1"));
    EXPECT_TRUE(is_path(g, r.path, g.index_of("e1"), g.index_of("-e1")));
    EXPECT_EQ(r.classifier_verdict, "minimax_point");
    EXPECT_TRUE(classify_vertex(g, f, r.z).has(PointKind::minimax_point));
    EXPECT_TRUE(r.low_neighbors.empty());
    EXPECT_TRUE(r.warnings.empty());
}

TEST(FindMinimax, PathForcesDegreeWarning) {
    const Graph p5 = fixtures::p5();
    const auto r = find_minimax(p5, VertexFunction::on_all(p5, {0, 5, 1, 3, 0}), 0, 4);
    EXPECT_EQ(r.c, 5.0);
    EXPECT_EQ(r.z, p5.index_of("b"));
    ASSERT_FALSE(r.warnings.empty());
    EXPECT_NE(r.warnings.front().find("degree"), std::string::npos);
    EXPECT_EQ(r.classifier_verdict.rfind("undetermined", 0), 0u);
}

TEST(FindMinimax, Errors) {
    const Graph p5 = fixtures::p5();
    const auto f = VertexFunction::on_all(p5, {0, 5, 1, 3, 0});
    EXPECT_EQ(validation_kind([&] { find_minimax(p5, f, 0, 0); }), "same_endpoints");
    EXPECT_EQ(validation_kind([&] { find_minimax(p5, f, 0, 1); }), "not_strict_minimum");
    const Graph split = Graph::from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    EXPECT_EQ(validation_kind([&] { find_minimax(split, VertexFunction::on_all(split, {0, 1, 0, 1}), 0, 2); }),
              "unreachable");
}

TEST(FindMinimax, RandomInstancesAgainstOracle) {
    Rng rng(4242);
    int tested = 0;
    for (int trial = 0; trial < 400 && tested < 100; ++trial) {
        const std::size_t n = 4 + rng.below(7);
        const Graph g = fixtures::random_connected(rng, n, 0.35);
        std::vector<double> v(n);
        for (double& x : v) x = rng.uniform(0, 10);
        std::vector<Vertex> minima;
        for (Vertex x = 0; x < n; ++x) {
            if (is_strict_min(g, v, x)) minima.push_back(x);
        }
        if (minima.size() < 2) continue;
        ++tested;
        const auto f = VertexFunction::on_all(g, v);
        const auto r = find_minimax(g, f, minima[0], minima[1]);
        EXPECT_EQ(r.c, oracle::bottleneck_brute(g, v, minima[0], minima[1]));
        EXPECT_GT(r.c, std::min(v[minima[0]], v[minima[1]]));
        EXPECT_EQ(v[r.z], r.c);
        EXPECT_TRUE(is_path(g, r.path, minima[0], minima[1]));
        EXPECT_NE(std::find(r.path.begin(), r.path.end(), r.z), r.path.end());
        // low_neighbors lists exactly the off-path neighbors of z below c.
        std::vector<Vertex> low;
        for (Vertex y : g.neighbors(r.z)) {
            if (std::find(r.path.begin(), r.path.end(), y) == r.path.end() && v[y] < r.c) low.push_back(y);
        }
        EXPECT_EQ(r.low_neighbors, low);
        EXPECT_EQ(r.low_neighbors.empty(), std::none_of(r.warnings.begin(), r.warnings.end(), [](const std::string& w) {
                      return w.find("below") != std::string::npos;
                  }));
    }
    EXPECT_GE(tested, 100);
}

TEST(Coercive, Examples) {
    const Graph p5 = fixtures::p5();
    const auto w = build_window(p5, resolve_names(p5, {"b", "c", "d"}));
    const auto f = VertexFunction::on_all(p5, {10, 0, 0, 0, 10});
    EXPECT_TRUE(is_coercive_on_window(f, w, 1.0));
    EXPECT_TRUE(is_coercive_on_window(f, w));
    EXPECT_FALSE(is_coercive_on_window(VertexFunction::on_all(p5, {1, 1, 1, 1, 1}), w));
    EXPECT_FALSE(is_coercive_on_window(f, whole_graph_window(p5)));

    // Octahedron embedded as the interior of a larger graph with a high rim.
    const Graph oct = fixtures::octahedron();
    std::vector<std::string> names(oct.names());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [x, y] : oct.edges()) edges.emplace_back(oct.name(x), oct.name(y));
    for (const auto& n : oct.names()) {
        names.push_back("rim" + n);
        edges.emplace_back(n, "rim" + n);
    }
    const Graph big = Graph::from_edges(names, edges);
    std::vector<double> v{0, 0, 1, 1, 1, 1, 100, 100, 100, 100, 100, 100};
    const auto wb = build_window(big, std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    EXPECT_TRUE(is_coercive_on_window(VertexFunction::on_all(big, v), wb));
}
