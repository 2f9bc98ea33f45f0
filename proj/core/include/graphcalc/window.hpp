// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

#include "graphcalc/graph.hpp"

namespace graphcalc {

enum class Region : std::uint8_t { outside, interior, boundary };

/// Interior vertex set S of a host graph with its vertex boundary
/// dS = { y not in S : y ~ x for some x in S } and closure S u dS.
///
/// The boundary is always recomputed from the host; the interior must induce
/// a connected subgraph. The host graph must outlive the window.
class SubgraphWindow {
public:
    const Graph& host() const noexcept { return *host_; }

    const VertexSet& interior() const noexcept { return interior_; }
    const VertexSet& boundary() const noexcept { return boundary_; }
    const VertexSet& closure() const noexcept { return closure_; }

    Region region(Vertex v) const { return region_.at(v); }
    bool in_interior(Vertex v) const { return region(v) == Region::interior; }
    bool in_boundary(Vertex v) const { return region(v) == Region::boundary; }
    bool in_closure(Vertex v) const { return region(v) != Region::outside; }

    /// Position of an interior vertex inside interior(); used for local indexing.
    std::size_t local_index(Vertex v) const;

private:
    friend SubgraphWindow build_window(const Graph& g, std::span<const Vertex> interior);

    const Graph* host_ = nullptr;
    VertexSet interior_;
    VertexSet boundary_;
    VertexSet closure_;
    std::vector<Region> region_;
    std::vector<std::size_t> local_;
};

/// Throws ValidationError("empty_interior"), ("unknown_vertex") or
/// ("disconnected_interior").
SubgraphWindow build_window(const Graph& g, std::span<const Vertex> interior);

/// S = V; the boundary is empty. Requires a connected graph.
SubgraphWindow whole_graph_window(const Graph& g);

}  // namespace graphcalc
