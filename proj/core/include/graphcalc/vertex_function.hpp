// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "graphcalc/graph.hpp"

namespace graphcalc {

/// Real-valued function on a subset of a host graph's vertices.
///
/// Storage is dense over the host; reads outside the domain throw
/// ValidationError("out_of_domain").
class VertexFunction {
public:
    VertexFunction() = default;

    /// Zero on `domain`.
    VertexFunction(const Graph& g, std::span<const Vertex> domain);

    /// Defined on every vertex with the given values in vertex order.
    static VertexFunction on_all(const Graph& g, std::vector<double> values);
    static VertexFunction constant(const Graph& g, std::span<const Vertex> domain, double value);

    const Graph& host() const noexcept { return *host_; }

    double operator()(Vertex v) const { return at(v); }
    double at(Vertex v) const;
    void set(Vertex v, double value);

    bool defined(Vertex v) const noexcept { return v < defined_.size() && defined_[v]; }
    bool covers(std::span<const Vertex> vertices) const;
    void require(std::span<const Vertex> vertices) const;

    /// Sorted domain.
    VertexSet domain() const;

    /// Dense storage (zero outside the domain), indexed by Vertex.
    const std::vector<double>& raw() const noexcept { return values_; }

    /// Pointwise a*this + b*other on the intersection of domains.
    VertexFunction combine(double a, const VertexFunction& other, double b) const;

private:
    const Graph* host_ = nullptr;
    std::vector<double> values_;
    std::vector<bool> defined_;
};

/// Parses CSV with header "vertex,value". Listed vertices form the domain.
VertexFunction load_vertex_function(const Graph& g, std::string_view csv_text);

}  // namespace graphcalc
