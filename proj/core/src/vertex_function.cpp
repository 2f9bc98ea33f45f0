// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/vertex_function.hpp"

#include "csv.hpp"
#include "graphcalc/error.hpp"

namespace graphcalc {

VertexFunction::VertexFunction(const Graph& g, std::span<const Vertex> domain)
    : host_(&g), values_(g.vertex_count(), 0.0), defined_(g.vertex_count(), false) {
    for (Vertex v : domain) {
        g.check_vertex(v);
        defined_[v] = true;
    }
}

VertexFunction VertexFunction::on_all(const Graph& g, std::vector<double> values) {
    if (values.size() != g.vertex_count()) {
        throw ValidationError("size_mismatch", "expected one value per vertex");
    }
    VertexFunction f;
    f.host_ = &g;
    f.values_ = std::move(values);
    f.defined_.assign(g.vertex_count(), true);
    return f;
}

VertexFunction VertexFunction::constant(const Graph& g, std::span<const Vertex> domain, double value) {
    VertexFunction f(g, domain);
    for (Vertex v : domain) f.values_[v] = value;
    return f;
}

double VertexFunction::at(Vertex v) const {
    if (!defined(v)) {
        const std::string id = (host_ && v < host_->vertex_count()) ? host_->name(v) : std::to_string(v);
        throw ValidationError("out_of_domain", "function is not defined at vertex \"" + id + "\"");
    }
    return values_[v];
}

void VertexFunction::set(Vertex v, double value) {
    if (!defined(v)) {
        const std::string id = (host_ && v < host_->vertex_count()) ? host_->name(v) : std::to_string(v);
        throw ValidationError("out_of_domain", "function is not defined at vertex \"" + id + "\"");
    }
    values_[v] = value;
}

bool VertexFunction::covers(std::span<const Vertex> vertices) const {
    for (Vertex v : vertices) {
        if (!defined(v)) return false;
    }
    return true;
}

void VertexFunction::require(std::span<const Vertex> vertices) const {
    for (Vertex v : vertices) (void)at(v);
}

VertexSet VertexFunction::domain() const {
    VertexSet out;
    for (Vertex v = 0; v < defined_.size(); ++v) {
        if (defined_[v]) out.push_back(v);
    }
    return out;
}

VertexFunction VertexFunction::combine(double a, const VertexFunction& other, double b) const {
    VertexFunction out(*host_, {});
    for (Vertex v = 0; v < defined_.size(); ++v) {
        if (defined_[v] && other.defined(v)) {
            out.defined_[v] = true;
            out.values_[v] = a * values_[v] + b * other.values_[v];
        }
    }
    return out;
}

VertexFunction load_vertex_function(const Graph& g, std::string_view csv_text) {
    const auto table = detail::parse_csv(csv_text, {"vertex", "value"});
    VertexFunction f(g, {});
    std::vector<Vertex> domain;
    std::vector<double> values;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const Vertex v = g.index_of(table.rows[r][0]);
        for (Vertex seen : domain) {
            if (seen == v) {
                throw ValidationError("parse_error", "CSV line " + std::to_string(table.line_numbers[r]) +
                                                         ": vertex \"" + table.rows[r][0] + "\" listed twice");
            }
        }
        domain.push_back(v);
        values.push_back(detail::parse_real(table.rows[r][1], table.line_numbers[r]));
    }
    f = VertexFunction(g, domain);
    for (std::size_t i = 0; i < domain.size(); ++i) f.set(domain[i], values[i]);
    return f;
}

}  // namespace graphcalc
