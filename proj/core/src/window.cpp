// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/window.hpp"

#include <algorithm>
#include <limits>

#include "graphcalc/error.hpp"

namespace graphcalc {

std::size_t SubgraphWindow::local_index(Vertex v) const {
    if (!in_interior(v)) {
        throw ValidationError("out_of_domain", "vertex \"" + host_->name(v) + "\" is not interior to the window");
    }
    return local_[v];
}

SubgraphWindow build_window(const Graph& g, std::span<const Vertex> interior) {
    if (interior.empty()) throw ValidationError("empty_interior", "window interior must be nonempty");

    SubgraphWindow w;
    w.host_ = &g;
    w.interior_ = make_vertex_set(g, {interior.begin(), interior.end()});
    if (!induces_connected(g, w.interior_)) {
        throw ValidationError("disconnected_interior", "window interior does not induce a connected subgraph");
    }

    w.region_.assign(g.vertex_count(), Region::outside);
    w.local_.assign(g.vertex_count(), std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < w.interior_.size(); ++i) {
        w.region_[w.interior_[i]] = Region::interior;
        w.local_[w.interior_[i]] = i;
    }
    for (Vertex x : w.interior_) {
        for (Vertex y : g.neighbors(x)) {
            if (w.region_[y] == Region::outside) w.region_[y] = Region::boundary;
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (w.region_[v] == Region::boundary) w.boundary_.push_back(v);
        if (w.region_[v] != Region::outside) w.closure_.push_back(v);
    }
    return w;
}

SubgraphWindow whole_graph_window(const Graph& g) {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return build_window(g, all);
}

}  // namespace graphcalc
