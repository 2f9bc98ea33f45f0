// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/vector_field.hpp"

#include <cmath>

#include "csv.hpp"
#include "graphcalc/error.hpp"

namespace graphcalc {

VectorField::VectorField(const Graph& g, std::span<const Vertex> domain, bool antisymmetric)
    : host_(&g), values_(g.vertex_count()), defined_(g.vertex_count(), false), antisymmetric_(antisymmetric) {
    for (Vertex x : domain) {
        g.check_vertex(x);
        defined_[x] = true;
        values_[x].assign(g.degree(x), 0.0);
    }
}

VectorField VectorField::zero(const Graph& g, bool antisymmetric) {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return VectorField(g, all, antisymmetric);
}

void VectorField::require(std::span<const Vertex> sources) const {
    for (Vertex x : sources) (void)at(x);
}

VertexSet VectorField::domain() const {
    VertexSet out;
    for (Vertex v = 0; v < defined_.size(); ++v) {
        if (defined_[v]) out.push_back(v);
    }
    return out;
}

std::span<const double> VectorField::at(Vertex x) const {
    if (!defined(x)) {
        throw ValidationError("out_of_domain", "vector field is not defined at vertex \"" + host_->name(x) + "\"");
    }
    return values_[x];
}

double VectorField::at(Vertex x, Vertex y) const {
    const auto row = at(x);
    const auto slot = host_->neighbor_slot(x, y);
    if (!slot) {
        throw ValidationError("not_adjacent",
                              "\"" + host_->name(x) + "\" and \"" + host_->name(y) + "\" are not adjacent");
    }
    return row[*slot];
}

void VectorField::set(Vertex x, Vertex y, double value) {
    (void)at(x);
    const auto slot = host_->neighbor_slot(x, y);
    if (!slot) {
        throw ValidationError("not_adjacent",
                              "\"" + host_->name(x) + "\" and \"" + host_->name(y) + "\" are not adjacent");
    }
    values_[x][*slot] = value;
}

double VectorField::antisymmetry_defect() const {
    double worst = 0.0;
    for (Vertex x = 0; x < values_.size(); ++x) {
        if (!defined_[x]) continue;
        const auto nb = host_->neighbors(x);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const Vertex y = nb[k];
            if (!defined_[y]) continue;
            worst = std::max(worst, std::abs(values_[x][k] + at(y, x)));
        }
    }
    return worst;
}

VectorField VectorField::combine(double a, const VectorField& other, double b) const {
    std::vector<Vertex> common;
    for (Vertex x = 0; x < defined_.size(); ++x) {
        if (defined_[x] && other.defined(x)) common.push_back(x);
    }
    VectorField out(*host_, common, antisymmetric_ && other.antisymmetric_);
    for (Vertex x : common) {
        for (std::size_t k = 0; k < values_[x].size(); ++k) {
            out.values_[x][k] = a * values_[x][k] + b * other.values_[x][k];
        }
    }
    return out;
}

VectorField load_vector_field(const Graph& g, std::string_view csv_text, FieldSymmetry mode) {
    const auto table = detail::parse_csv(csv_text, {"from", "to", "value"});
    VectorField w = VectorField::zero(g, mode == FieldSymmetry::antisymmetric);
    std::vector<std::vector<bool>> assigned(g.vertex_count());
    for (Vertex x = 0; x < g.vertex_count(); ++x) assigned[x].assign(g.degree(x), false);

    const auto assign = [&](Vertex x, Vertex y, double value, std::size_t line) {
        const auto slot = g.neighbor_slot(x, y);
        if (!slot) {
            throw ValidationError("not_adjacent", "CSV line " + std::to_string(line) + ": \"" + g.name(x) +
                                                      "\" and \"" + g.name(y) + "\" are not adjacent");
        }
        if (assigned[x][*slot] && w.at(x, y) != value) {
            throw ValidationError("parse_error", "CSV line " + std::to_string(line) + ": conflicting value for (" +
                                                     g.name(x) + ", " + g.name(y) + ")");
        }
        assigned[x][*slot] = true;
        w.set(x, y, value);
    };

    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const std::size_t line = table.line_numbers[r];
        const Vertex x = g.index_of(table.rows[r][0]);
        const Vertex y = g.index_of(table.rows[r][1]);
        const double value = detail::parse_real(table.rows[r][2], line);
        assign(x, y, value, line);
        if (mode == FieldSymmetry::symmetric) assign(y, x, value, line);
        if (mode == FieldSymmetry::antisymmetric) assign(y, x, -value, line);
    }
    return w;
}

}  // namespace graphcalc
