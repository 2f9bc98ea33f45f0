// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphcalc/graph.hpp"
#include "graphcalc/vertex_function.hpp"
#include "graphcalc/window.hpp"

namespace graphcalc {

enum class PointKind { strict_local_min, local_min, strict_local_max, local_max, minimax_point, regular };

std::string to_string(PointKind kind);

/// Through-pair x0, x1 (both at or above f(x)) and the two arcs of N(x)
/// joining them, each dipping to or below f(x) at y0 resp. y1.
struct MinimaxWitness {
    Vertex x0 = 0;
    Vertex x1 = 0;
    Vertex y0 = 0;
    Vertex y1 = 0;
    std::vector<Vertex> arc_plus;   ///< x0 ... y0 ... x1
    std::vector<Vertex> arc_minus;  ///< x0 ... y1 ... x1
};

struct VertexClassification {
    Vertex vertex = 0;
    std::vector<PointKind> kinds;  ///< every kind that applies, in enum order
    std::optional<MinimaxWitness> witness;
    bool minimax_tested = false;
    std::string minimax_note;  ///< why the minimax test was skipped, if it was

    bool has(PointKind kind) const;
};

/// Neighborhoods above this size are rejected by the arc enumeration.
inline constexpr std::size_t kMaxMinimaxDegree = 12;

/// Local extremum flags from the signs of f(y) - f(x) over N(x), plus the
/// mini-max test: neighbors x0 != x1 with min(f(x0), f(x1)) >= f(x) such that
/// N(x) splits into two simple x0-x1 paths of the induced neighborhood graph,
/// each with an inner vertex y where f(y) <= f(x). The test runs only when
/// d_x >= 4 and N(x) is connected; above kMaxMinimaxDegree it throws
/// ValidationError("degree_exceeds_bound").
VertexClassification classify_vertex(const Graph& g, const VertexFunction& f, Vertex x);

struct BottleneckResult {
    double c = 0.0;
    std::vector<Vertex> path;
};

/// c = min over z0-z1 paths of max f along the path. The returned path is the
/// shortest among optimal ones, lexicographically smallest among those.
/// Throws ValidationError("unreachable").
BottleneckResult bottleneck_level(const Graph& g, const VertexFunction& f, Vertex z0, Vertex z1);

struct MinimaxSearch {
    double c = 0.0;
    Vertex z = 0;
    std::vector<Vertex> path;            ///< optimal path after all reroutes; passes through z
    std::vector<Vertex> low_neighbors;   ///< y in N(z) off the path with f(y) < c
    std::vector<std::string> warnings;
    std::string classifier_verdict;      ///< "minimax_point", "not_minimax" or "undetermined: ..."
};

/// Mountain-pass search between two strict local minima: take an optimal
/// bottleneck path, and for each vertex at level c try to bypass it through
/// neighbors strictly below c; return the first level-c vertex that cannot be
/// bypassed. Hypothesis violations at z are reported as warnings.
/// Throws ValidationError("not_strict_minimum"), ("same_endpoints") or ("unreachable").
MinimaxSearch find_minimax(const Graph& g, const VertexFunction& f, Vertex z0, Vertex z1);

/// Finite-window stand-in for coercivity: min over dS of f exceeds `level`
/// (default: max of f over S). False for an empty boundary.
bool is_coercive_on_window(const VertexFunction& f, const SubgraphWindow& w,
                           std::optional<double> level = std::nullopt);

}  // namespace graphcalc
