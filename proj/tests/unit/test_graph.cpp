// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "graphcalc/error.hpp"
#include "graphcalc/graph.hpp"
#include "graphcalc/window.hpp"
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

}  // namespace

TEST(LoadGraph, PathOfThree) {
    const Graph g = load_graph(R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})");
    ASSERT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.degree(0), 1u);
    EXPECT_EQ(g.degree(1), 2u);
    EXPECT_EQ(g.degree(2), 1u);
    EXPECT_EQ(g.name(1), "b");
}

TEST(LoadGraph, CycleFileHasDegreeTwo) {
    const Graph g = load_graph(fixtures::read_fixture("c4.json"));
    EXPECT_EQ(g.edge_count(), 4u);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(LoadGraph, NamedErrors) {
    EXPECT_EQ(validation_kind([] { load_graph(R"({"vertices":["a"],"edges":[["a","a"]]})"); }), "self_loop");
    EXPECT_EQ(validation_kind([] { load_graph(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})"); }),
              "duplicate_edge");
    EXPECT_EQ(validation_kind([] { load_graph(R"({"vertices":["a"],"edges":[["a","z"]]})"); }), "dangling_endpoint");
    EXPECT_EQ(validation_kind([] { load_graph(R"({"vertices":["a","a"],"edges":[]})"); }), "duplicate_vertex");
    EXPECT_EQ(validation_kind([] { load_graph("{not json"); }), "parse_error");
    EXPECT_EQ(validation_kind([] { load_graph(R"({"vertices":"a"})"); }), "parse_error");
}

TEST(LoadGraph, KeepsFileOrder) {
    const Graph g = load_graph(R"({"vertices":["z","m","a"],"edges":[["a","z"]]})");
    EXPECT_EQ(g.names(), (std::vector<std::string>{"z", "m", "a"}));
    EXPECT_EQ(g.index_of("a"), 2u);
}

TEST(Graph, HandshakeAndSymmetry) {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = fixtures::random_connected(rng, 5 + rng.below(20), 0.2);
        std::size_t degree_sum = 0;
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
            degree_sum += g.degree(x);
            for (Vertex y : g.neighbors(x)) {
                EXPECT_NE(x, y);
                EXPECT_TRUE(g.adjacent(y, x));
            }
        }
        EXPECT_EQ(degree_sum, 2 * g.edge_count());
    }
}

TEST(Distance, Examples) {
    const Graph p3 = fixtures::p3();
    EXPECT_EQ(graph_distance(p3, 0, 2), 2u);
    EXPECT_EQ(graph_distance(p3, 1, 1), 0u);
    const Graph c4 = fixtures::c4();
    EXPECT_EQ(graph_distance(c4, c4.index_of("1"), c4.index_of("3")), 2u);
}

TEST(Distance, UnreachableIsExplicit) {
    const Graph g = Graph::from_edges({"a", "b", "c"}, {{"a", "b"}});
    EXPECT_FALSE(graph_distance(g, 0, 2).has_value());
    EXPECT_FALSE(is_connected(g));
}

TEST(Distance, UnknownVertex) {
    const Graph g = fixtures::p3();
    EXPECT_EQ(validation_kind([&] { g.index_of("zz"); }), "unknown_vertex");
}

TEST(Distance, MetricAgainstFloydWarshall) {
    Rng rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng.below(29);
        const Graph g = fixtures::random_connected(rng, n, 0.1);
        const auto ref = oracle::all_pairs_distances(g);
        for (Vertex x = 0; x < n; ++x) {
            const auto row = distances_from(g, x);
            for (Vertex y = 0; y < n; ++y) {
                ASSERT_TRUE(row[y].has_value());
                EXPECT_EQ(*row[y], ref[x][y]);
                EXPECT_EQ(*graph_distance(g, x, y), *graph_distance(g, y, x));
                EXPECT_EQ(*row[y] == 0, x == y);
                for (Vertex z = 0; z < n; ++z) EXPECT_LE(ref[x][z], ref[x][y] + ref[y][z]);
            }
        }
    }
}

TEST(Window, BoundaryFromDefinition) {
    const Graph p3 = fixtures::p3();
    const auto w = build_window(p3, resolve_names(p3, {"b"}));
    EXPECT_EQ(w.boundary(), resolve_names(p3, {"a", "c"}));
    EXPECT_EQ(w.closure().size(), 3u);

    const Graph p5 = fixtures::p5();
    const auto w5 = build_window(p5, resolve_names(p5, {"b", "c", "d"}));
    EXPECT_EQ(w5.boundary(), resolve_names(p5, {"a", "e"}));
}

TEST(Window, DisconnectedInterior) {
    const Graph p5 = fixtures::p5();
    EXPECT_EQ(validation_kind([&] { build_window(p5, resolve_names(p5, {"b", "d"})); }), "disconnected_interior");
    EXPECT_EQ(validation_kind([&] { build_window(p5, std::vector<Vertex>{}); }), "empty_interior");
    EXPECT_EQ(validation_kind([&] { resolve_names(p5, {"q"}); }), "unknown_vertex");
}

TEST(Window, BoundaryProperties) {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = fixtures::random_connected(rng, 12, 0.15);
        // Grow a connected interior by BFS from a random root.
        std::vector<Vertex> interior{static_cast<Vertex>(rng.below(12))};
        const std::size_t target = 1 + rng.below(8);
        for (std::size_t i = 0; i < interior.size() && interior.size() < target; ++i) {
            for (Vertex y : g.neighbors(interior[i])) {
                if (interior.size() < target && std::find(interior.begin(), interior.end(), y) == interior.end()) {
                    interior.push_back(y);
                }
            }
        }
        const auto w = build_window(g, interior);
        for (Vertex z : w.boundary()) {
            EXPECT_FALSE(w.in_interior(z));
            bool touches = false;
            for (Vertex y : g.neighbors(z)) touches = touches || w.in_interior(y);
            EXPECT_TRUE(touches);
        }
        for (Vertex x : w.interior()) {
            for (Vertex y : g.neighbors(x)) EXPECT_TRUE(w.in_closure(y));
        }
    }
}

TEST(Volume, Examples) {
    const Graph c4 = fixtures::c4();
    EXPECT_EQ(volume(c4, std::vector<Vertex>{0, 1, 2, 3}), 8.0);
    EXPECT_EQ(volume(c4, std::vector<Vertex>{}), 0.0);
    const Graph p3 = fixtures::p3();
    EXPECT_EQ(volume(p3, std::vector<Vertex>{1}), 2.0);
}

TEST(Monge, Examples) {
    const Graph p5 = fixtures::p5();
    const auto single = monge_cost(p5, resolve_names(p5, {"a"}), resolve_names(p5, {"e"}));
    EXPECT_EQ(single.cost, 4.0);
    EXPECT_EQ(single.assignment, (std::vector<std::size_t>{0}));

    const Graph c4 = fixtures::c4();
    const std::vector<Vertex> a{c4.index_of("1"), c4.index_of("2")};
    const std::vector<Vertex> b{c4.index_of("3"), c4.index_of("4")};
    const auto r = monge_cost(c4, a, b);
    EXPECT_EQ(r.cost, 2.0);
    EXPECT_EQ(r.assignment, (std::vector<std::size_t>{1, 0}));  // 1 -> 4, 2 -> 3
}

TEST(Monge, TieReturnsLexicographicallySmallest) {
    const Graph k4 = fixtures::k4();
    const auto r = monge_cost(k4, std::vector<Vertex>{0, 1}, std::vector<Vertex>{2, 3});
    EXPECT_EQ(r.cost, 2.0);
    EXPECT_EQ(r.assignment, (std::vector<std::size_t>{0, 1}));
}

TEST(Monge, Errors) {
    const Graph p5 = fixtures::p5();
    EXPECT_EQ(validation_kind([&] { monge_cost(p5, std::vector<Vertex>{0}, std::vector<Vertex>{1, 2}); }), "size_mismatch");
    EXPECT_EQ(validation_kind([&] { monge_cost(p5, std::vector<Vertex>{0, 1}, std::vector<Vertex>{1, 2}); }), "overlap");
    const Graph big = fixtures::grid(5, 5);
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < 11; ++v) a.push_back(v);
    for (Vertex v = 11; v < 22; ++v) b.push_back(v);
    EXPECT_EQ(validation_kind([&] { monge_cost(big, a, b); }), "size_exceeds_bound");
}

TEST(Monge, MatchesPermutationOracle) {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 8 + rng.below(8);
        const Graph g = fixtures::random_connected(rng, n, 0.15);
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
        const std::size_t k = 1 + rng.below(std::min<std::size_t>(6, n / 2));
        const std::vector<Vertex> a(order.begin(), order.begin() + static_cast<long>(k));
        const std::vector<Vertex> b(order.begin() + static_cast<long>(k), order.begin() + static_cast<long>(2 * k));
        const auto got = monge_cost(g, a, b);
        const auto ref = oracle::monge_brute(g, a, b);
        EXPECT_EQ(got.cost, ref.cost);
        EXPECT_EQ(got.assignment, ref.assignment);
    }
}
