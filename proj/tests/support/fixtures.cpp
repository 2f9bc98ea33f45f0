// SPDX-License-Identifier: Apache-2.0
#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fixtures {
namespace {

Graph build(std::vector<std::string> names, std::vector<std::pair<std::string, std::string>> edges) {
    return Graph::from_edges(std::move(names), edges);
}

}  // namespace

Graph p3() { return build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

Graph p5() { return build({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}}); }

Graph c4() { return build({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}}); }

Graph k2() { return build({"a", "b"}, {{"a", "b"}}); }

Graph k4() {
    return build({"1", "2", "3", "4"}, {{"1", "2"}, {"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"3", "4"}});
}

Graph star3() { return build({"center", "l1", "l2", "l3"}, {{"center", "l1"}, {"center", "l2"}, {"center", "l3"}}); }

Graph octahedron() {
    const std::vector<std::string> names{"e1", "-e1", "e2", "-e2", "e3", "-e3"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            if (i / 2 != j / 2) edges.emplace_back(names[i], names[j]);
        }
    }
    return build(names, edges);
}

Graph grid(std::size_t rows, std::size_t cols) {
    auto id = [](std::size_t r, std::size_t c) { return "r" + std::to_string(r) + "c" + std::to_string(c); };
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            names.push_back(id(r, c));
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return build(names, edges);
}

std::vector<std::pair<std::string, Graph>> standard_set() {
    return {{"P3", p3()}, {"P5", p5()}, {"C4", c4()}, {"K4", k4()}, {"octahedron", octahedron()}, {"grid4x4", grid(4, 4)}};
}

std::vector<NamedWindow> standard_windows() {
    const std::vector<std::pair<std::string, std::vector<std::string>>> interiors{
        {"P3", {"b"}},
        {"P5", {"b", "c", "d"}},
        {"C4", {"1", "2", "3"}},
        {"K4", {"1", "2"}},
        {"octahedron", {"e1", "e2", "e3"}},
        {"grid4x4", {"r1c1", "r1c2", "r2c1", "r2c2"}},
    };
    std::vector<NamedWindow> out;
    auto set = standard_set();
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto g = std::make_shared<const Graph>(std::move(set[i].second));
        auto w = graphcalc::build_window(*g, graphcalc::resolve_names(*g, interiors[i].second));
        out.push_back({set[i].first, g, std::move(w)});
    }
    return out;
}

std::vector<NamedWindow> closed_windows() {
    std::vector<NamedWindow> out;
    for (auto& [name, graph] : standard_set()) {
        auto g = std::make_shared<const Graph>(std::move(graph));
        auto w = graphcalc::whole_graph_window(*g);
        out.push_back({name, g, std::move(w)});
    }
    return out;
}

Graph random_connected(graphcalc::Rng& rng, std::size_t n, double p) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 1; i < n; ++i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        has[i][j] = has[j][i] = true;
        edges.emplace_back(names[j], names[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!has[i][j] && rng.uniform() < p) {
                has[i][j] = has[j][i] = true;
                edges.emplace_back(names[i], names[j]);
            }
        }
    }
    return build(names, edges);
}

std::string fixture_path(const std::string& name) { return std::string(GRAPHCALC_FIXTURE_DIR) + "/" + name; }

std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace fixtures
