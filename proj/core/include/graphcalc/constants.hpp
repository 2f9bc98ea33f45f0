// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>

#include "graphcalc/graph.hpp"
#include "graphcalc/vertex_function.hpp"
#include "graphcalc/window.hpp"

namespace graphcalc {

/// Isoperimetric data of one cut S | S^c.
struct CutReport {
    VertexSet subset;
    std::size_t edge_boundary_size = 0;    ///< |E(S, S^c)|
    std::size_t vertex_boundary_size = 0;  ///< |dS|
    double vol_S = 0.0;
    double vol_complement = 0.0;
    double h_value = 0.0;  ///< |E(S, S^c)| / min(vol S, vol S^c)
    double g_value = 0.0;  ///< |dS| / min(vol S, vol S^c)
};

/// Throws ValidationError("improper_subset") unless S is proper and nonempty.
CutReport cut_report(const Graph& g, std::span<const Vertex> subset);

struct CheegerResult {
    double value = 0.0;
    CutReport witness;
};

/// Largest vertex count accepted by the exhaustive enumeration.
inline constexpr std::size_t kMaxCheegerSize = 24;

/// Exact h_G = min_S |E(S,S^c)| / min(vol S, vol S^c) by enumerating one
/// representative of every {S, S^c} pair. The witness is the lexicographically
/// smallest optimal set (as a sorted index sequence), taken over both sides of
/// each cut. `threads` > 1 splits the enumeration; the result does not depend on it.
///
/// Throws ValidationError("disconnected"), ("size_exceeds_bound") or ("too_small").
CheegerResult cheeger_h(const Graph& g, unsigned threads = 1);

/// Exact g_G = min_S |dS| / min(vol S, vol S^c) over all proper nonempty S.
CheegerResult cheeger_g(const Graph& g, unsigned threads = 1);

struct FunctionalCheeger {
    double value = 0.0;
    double optimal_c = 0.0;  ///< lower degree-weighted median of f
};

/// sum_{xy in E} |f(y) - f(x)| / min_c sum_x d_x |f(x) - c|, the minimum taken
/// at the lower weighted median. Throws ValidationError("constant_function").
FunctionalCheeger cheeger_functional(const Graph& g, const VertexFunction& f);

struct PoincareResult {
    double constant = 0.0;
    VertexFunction extremal;  ///< attains equality; unit in the weighted norm
};

/// Best c with sum_{x in S} sum_{y ~ x} (u(y) - u(x))^2 >= c sum_{x in S} u(x)^2 d_x
/// for all u vanishing on dS. Generalized eigenproblem A u = c D u where
/// A = 2 L_S + diag(b), L_S the combinatorial Laplacian of the induced
/// subgraph and b_x the number of boundary neighbors. Since A = 2 D M - diag(b)
/// with M the Dirichlet matrix of -Delta, c lies in [2 mu_1 - max b/d, 2 mu_1].
PoincareResult poincare_dirichlet_constant(const SubgraphWindow& w);

/// Best c with sum_x sum_{y ~ x} (u(y) - u(x))^2 >= c sum_x (u(x) - u_bar)^2 d_x
/// over the whole graph, u_bar the degree-weighted mean. Equals 2 lambda_2 of
/// -Delta. Throws ValidationError("disconnected") or ("too_small").
PoincareResult poincare_neumann_constant(const Graph& g);

}  // namespace graphcalc
