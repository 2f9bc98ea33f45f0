// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "graphcalc/graph.hpp"
#include "graphcalc/random.hpp"
#include "graphcalc/window.hpp"

namespace fixtures {

using graphcalc::Graph;

Graph p3();          // a - b - c
Graph p5();          // a - b - c - d - e
Graph c4();          // 1 - 2 - 3 - 4 - 1
Graph k2();          // a - b
Graph k4();          // 1..4
Graph star3();       // center joined to l1, l2, l3
Graph octahedron();  // e1, -e1, e2, -e2, e3, -e3; antipodes not adjacent
Graph grid(std::size_t rows, std::size_t cols);  // r<i>c<j>, 4-neighbor lattice

/// The six graphs the identity and spectral suites run on.
std::vector<std::pair<std::string, Graph>> standard_set();

/// A window whose host is kept alive alongside it.
struct NamedWindow {
    std::string name;
    std::shared_ptr<const Graph> graph;
    graphcalc::SubgraphWindow window;
};

/// One Dirichlet window (nonempty boundary) per standard fixture.
std::vector<NamedWindow> standard_windows();

/// The whole graph as a closed window, per standard fixture.
std::vector<NamedWindow> closed_windows();

/// Connected graph: a random spanning tree plus each other edge with probability p.
Graph random_connected(graphcalc::Rng& rng, std::size_t n, double p);

/// Contents of a file under tests/fixtures.
std::string read_fixture(const std::string& name);
std::string fixture_path(const std::string& name);

}  // namespace fixtures
