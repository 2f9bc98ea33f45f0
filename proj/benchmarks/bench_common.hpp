// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graphcalc/graph.hpp"

namespace bench {

/// rows x cols 4-neighbor lattice with vertices r<i>c<j>.
inline graphcalc::Graph grid(std::size_t rows, std::size_t cols) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    auto id = [](std::size_t r, std::size_t c) { return "r" + std::to_string(r) + "c" + std::to_string(c); };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            names.push_back(id(r, c));
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    return graphcalc::Graph::from_edges(names, edges);
}

/// Interior vertices of a rows x cols lattice (everything off the outer frame).
inline std::vector<graphcalc::Vertex> grid_interior(std::size_t rows, std::size_t cols) {
    std::vector<graphcalc::Vertex> out;
    for (std::size_t r = 1; r + 1 < rows; ++r) {
        for (std::size_t c = 1; c + 1 < cols; ++c) out.push_back(r * cols + c);
    }
    return out;
}

}  // namespace bench
