// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "graphcalc/graph.hpp"

namespace graphcalc {

/// Edge values w(xy) on ordered adjacent pairs, stored per source vertex in
/// neighbor-slot order. A source x is in the domain when W(x) is defined,
/// i.e. w(xy) exists for every y in N(x).
class VectorField {
public:
    VectorField() = default;

    /// Zero field on the given sources.
    VectorField(const Graph& g, std::span<const Vertex> domain, bool antisymmetric = false);
    static VectorField zero(const Graph& g, bool antisymmetric = false);

    const Graph& host() const noexcept { return *host_; }

    bool defined(Vertex x) const noexcept { return x < defined_.size() && defined_[x]; }
    void require(std::span<const Vertex> sources) const;
    VertexSet domain() const;

    double at(Vertex x, Vertex y) const;
    void set(Vertex x, Vertex y, double value);

    /// Values in neighbor order of x.
    std::span<const double> at(Vertex x) const;

    bool antisymmetric_flag() const noexcept { return antisymmetric_; }
    void set_antisymmetric_flag(bool flag) noexcept { antisymmetric_ = flag; }

    /// Largest |w(xy) + w(yx)| over adjacent pairs with both sources defined.
    double antisymmetry_defect() const;

    VectorField combine(double a, const VectorField& other, double b) const;

private:
    const Graph* host_ = nullptr;
    std::vector<std::vector<double>> values_;
    std::vector<bool> defined_;
    bool antisymmetric_ = false;
};

enum class FieldSymmetry { as_given, symmetric, antisymmetric };

/// Parses CSV "from,to,value". The field is defined (zero-extended) on every
/// vertex; with symmetric/antisymmetric each listed pair also sets the
/// reverse entry, and contradictory duplicates throw ValidationError.
VectorField load_vector_field(const Graph& g, std::string_view csv_text, FieldSymmetry mode);

}  // namespace graphcalc
