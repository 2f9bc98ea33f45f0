// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/calculus.hpp"

#include <cmath>

#include "graphcalc/error.hpp"

namespace graphcalc {

namespace {

// The identity checkers accumulate in extended precision so that residuals
// reflect the identity rather than summation order.
using Wide = long double;

void require_neighborhood(const VertexFunction& f, Vertex x) {
    (void)f.at(x);
    f.require(f.host().neighbors(x));
}

}  // namespace

LaplacianScale parse_laplacian_scale(std::string_view text) {
    if (text == "1") return LaplacianScale::unit;
    if (text == "2/3") return LaplacianScale::two_thirds;
    throw ValidationError("invalid_scale", "laplacian scale must be \"1\" or \"2/3\", got \"" + std::string(text) + "\"");
}

double edge_difference(const VertexFunction& f, Vertex x, Vertex y) {
    if (!f.host().adjacent(x, y)) {
        throw ValidationError("not_adjacent", "\"" + f.host().name(x) + "\" and \"" + f.host().name(y) +
                                                  "\" are not adjacent");
    }
    return f.at(y) - f.at(x);
}

Gradient gradient(const VertexFunction& f, Vertex x) {
    require_neighborhood(f, x);
    const auto nb = f.host().neighbors(x);
    Gradient out;
    out.components.reserve(nb.size());
    double sq = 0.0;
    for (Vertex y : nb) {
        const double d = f.at(y) - f.at(x);
        out.components.push_back(d);
        sq += d * d;
    }
    out.squared_norm = nb.empty() ? 0.0 : sq / static_cast<double>(nb.size());
    return out;
}

double divergence(const VectorField& w, Vertex x) {
    const auto row = w.at(x);
    if (row.empty()) return 0.0;
    double acc = 0.0;
    for (double v : row) acc += v;
    return acc / static_cast<double>(row.size());
}

double laplacian(const VertexFunction& f, Vertex x, const CalculusConfig& cfg) {
    require_neighborhood(f, x);
    const auto nb = f.host().neighbors(x);
    if (nb.empty()) return 0.0;
    double acc = 0.0;
    for (Vertex y : nb) acc += f.at(y) - f.at(x);
    return cfg.scale() * acc / static_cast<double>(nb.size());
}

VertexFunction laplacian(const VertexFunction& f, std::span<const Vertex> at, const CalculusConfig& cfg) {
    VertexFunction out(f.host(), at);
    for (Vertex x : at) out.set(x, laplacian(f, x, cfg));
    return out;
}

double dot_gradient(const VectorField& w, const VertexFunction& f, Vertex x) {
    require_neighborhood(f, x);
    const auto row = w.at(x);
    const auto nb = f.host().neighbors(x);
    if (nb.empty()) return 0.0;
    double acc = 0.0;
    for (std::size_t k = 0; k < nb.size(); ++k) acc += row[k] * (f.at(nb[k]) - f.at(x));
    return acc / static_cast<double>(nb.size());
}

double directional_derivative(const VectorField& w, const VertexFunction& f, Vertex x) {
    return dot_gradient(w, f, x);
}

double dot(const VectorField& w, const VectorField& u, Vertex x) {
    const auto a = w.at(x);
    const auto b = u.at(x);
    if (a.empty()) return 0.0;
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc / static_cast<double>(a.size());
}

VectorField pointwise_product(const VertexFunction& f, const VectorField& w) {
    const auto sources = w.domain();
    for (Vertex x : sources) {
        if (!f.defined(x) || !f.covers(w.host().neighbors(x))) {
            throw ValidationError("domain_mismatch", "function does not cover the closed neighborhood of \"" +
                                                         w.host().name(x) + "\"");
        }
    }
    VectorField out(w.host(), sources, w.antisymmetric_flag());
    for (Vertex x : sources) {
        const auto nb = w.host().neighbors(x);
        const auto row = w.at(x);
        for (std::size_t k = 0; k < nb.size(); ++k) out.set(x, nb[k], 0.5 * (f.at(x) + f.at(nb[k])) * row[k]);
    }
    return out;
}

VectorField gradient_field(const VertexFunction& f, std::span<const Vertex> sources) {
    VectorField out(f.host(), sources, true);
    for (Vertex x : sources) {
        require_neighborhood(f, x);
        for (Vertex y : f.host().neighbors(x)) out.set(x, y, f.at(y) - f.at(x));
    }
    return out;
}

double HessianMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < entries.rows(); ++i) t += entries(i, i);
    return t;
}

HessianMatrix hessian(const VertexFunction& f, Vertex x) {
    require_neighborhood(f, x);
    const auto nb = f.host().neighbors(x);
    HessianMatrix h;
    h.center = x;
    h.neighbor_order.assign(nb.begin(), nb.end());
    h.entries = DenseMatrix(nb.size(), nb.size());
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = 0; j < nb.size(); ++j) {
            h.entries(i, j) = 0.5 * (f.at(nb[i]) + f.at(nb[j]) - 2.0 * f.at(x));
        }
    }
    return h;
}

DenseMatrix hessian_sum(const VectorField& w1, const VectorField& w2, Vertex x) {
    const auto a = w1.at(x);
    const auto b = w2.at(x);
    DenseMatrix out(a.size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = 0.5 * (a[i] + b[j]);
    }
    return out;
}

std::vector<double> hessian_sum_divergence(const VectorField& w1, const VectorField& w2, Vertex x) {
    const auto a = w1.at(x);
    const auto b = w2.at(x);
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

std::vector<double> hessian_divergence(const VertexFunction& f, Vertex x) {
    auto g = gradient(f, x).components;
    const double d = static_cast<double>(f.host().degree(x));
    for (double& v : g) v *= d;
    return g;
}

double integrate(const VertexFunction& f, std::span<const Vertex> subset) {
    double acc = 0.0;
    for (Vertex x : subset) acc += f.at(x) * static_cast<double>(f.host().degree(x));
    return acc;
}

double dirichlet_energy(const VertexFunction& f, const SubgraphWindow& w) {
    double acc = 0.0;
    for (Vertex x : w.interior()) {
        require_neighborhood(f, x);
        for (Vertex y : w.host().neighbors(x)) {
            const double d = f.at(y) - f.at(x);
            acc += d * d;
        }
    }
    return acc;
}

double weighted_inner(const VertexFunction& f, const VertexFunction& g, const SubgraphWindow& w) {
    double acc = 0.0;
    for (Vertex x : w.interior()) acc += f.at(x) * g.at(x) * static_cast<double>(w.host().degree(x));
    return acc;
}

double divergence_theorem_residual(const VectorField& w, std::span<const Vertex> subset) {
    if (!w.antisymmetric_flag()) {
        throw ValidationError("not_antisymmetric", "divergence theorem needs a field flagged antisymmetric");
    }
    const Graph& g = w.host();
    std::vector<bool> member(g.vertex_count(), false);
    for (Vertex x : subset) member.at(x) = true;
    Wide acc = 0.0L;
    for (Vertex x : subset) {
        const auto nb = g.neighbors(x);
        const auto row = w.at(x);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            if (member[nb[k]]) acc += row[k];
        }
    }
    return static_cast<double>(acc);
}

GreenSymmetricReport green_symmetric_report(const VertexFunction& f, const VertexFunction& g,
                                            const SubgraphWindow& w, const CalculusConfig& cfg) {
    f.require(w.closure());
    g.require(w.closure());
    const Graph& host = w.host();
    const Wide scale = cfg.scale();

    Wide lhs = 0.0L, interior = 0.0L, boundary = 0.0L, all_neighbors = 0.0L;
    for (Vertex x : w.interior()) {
        const Wide fx = f.at(x);
        const Wide gx = g.at(x);
        for (Vertex y : host.neighbors(x)) {
            const Wide df = f.at(y) - fx;
            const Wide dg = g.at(y) - gx;
            lhs += df * gx;
            all_neighbors += df * dg;
            if (w.in_interior(y)) {
                interior += df * dg;
            } else {
                boundary += gx * df;
            }
        }
    }
    lhs *= scale;
    interior *= -scale / 2;
    boundary *= scale;
    const Wide stated = -scale / 2 * all_neighbors + boundary;

    GreenSymmetricReport r;
    r.lhs = static_cast<double>(lhs);
    r.interior_term = static_cast<double>(interior);
    r.boundary_term = static_cast<double>(boundary);
    r.residual = static_cast<double>(lhs - interior - boundary);
    r.stated_form_residual = static_cast<double>(lhs - stated);

    bool same = true, dirichlet = true;
    for (Vertex v : w.closure()) same = same && f.at(v) == g.at(v);
    for (Vertex v : w.boundary()) dirichlet = dirichlet && f.at(v) == 0.0;
    if (same && dirichlet) {
        r.three_halves_residual = static_cast<double>(lhs + Wide(1.5) * scale * all_neighbors);
    }
    return r;
}

GreenVectorFieldReport green_vectorfield_report(const VectorField& w, const VertexFunction& f,
                                                const SubgraphWindow& win) {
    f.require(win.closure());
    w.require(win.interior());
    const Graph& host = win.host();
    Wide div_f = 0.0L, flux = 0.0L, product = 0.0L;
    for (Vertex x : win.interior()) {
        const auto nb = host.neighbors(x);
        const auto row = w.at(x);
        const Wide fx = f.at(x);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const Wide fy = f.at(nb[k]);
            const Wide wxy = row[k];
            div_f += wxy * fx;
            flux += wxy * (fy - fx);
            product += (fx + fy) / 2 * wxy;
        }
    }
    GreenVectorFieldReport r;
    r.divergence_times_f = static_cast<double>(div_f);
    r.half_flux_term = static_cast<double>(-flux / 2);
    r.product_divergence = static_cast<double>(product);
    r.residual = static_cast<double>(div_f - (-flux / 2 + product));
    return r;
}

MaximumPrincipleReport maximum_principle_check(const VertexFunction& f, Vertex x, const CalculusConfig& cfg) {
    const auto grad = gradient(f, x);
    const auto h = hessian(f, x);
    MaximumPrincipleReport r;
    r.gradient_nonneg = true;
    for (double c : grad.components) r.gradient_nonneg = r.gradient_nonneg && c >= 0.0;
    r.is_local_min = r.gradient_nonneg;
    r.hessian_nonneg = true;
    for (std::size_t i = 0; i < h.entries.rows(); ++i) {
        for (std::size_t j = 0; j < h.entries.cols(); ++j) r.hessian_nonneg = r.hessian_nonneg && h.entries(i, j) >= 0.0;
    }
    r.laplacian = laplacian(f, x, cfg);
    r.laplacian_nonneg = r.laplacian >= 0.0;
    return r;
}

}  // namespace graphcalc
