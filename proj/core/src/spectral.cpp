// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "graphcalc/error.hpp"

namespace graphcalc {

BoundaryCondition parse_boundary_condition(std::string_view text) {
    if (text == "dirichlet") return BoundaryCondition::dirichlet;
    if (text == "neumann") return BoundaryCondition::neumann;
    if (text == "none") return BoundaryCondition::none;
    throw ValidationError("invalid_bc", "boundary condition must be dirichlet, neumann or none");
}

std::string to_string(BoundaryCondition bc) {
    switch (bc) {
        case BoundaryCondition::dirichlet: return "dirichlet";
        case BoundaryCondition::neumann: return "neumann";
        case BoundaryCondition::none: return "none";
    }
    return "none";
}

// --- Operator ------------------------------------------------------------------

Operator::Operator(OperatorSpec spec) : spec_(std::move(spec)) {
    const SubgraphWindow& w = spec_.window;
    const Graph& g = w.host();
    if (spec_.bc == BoundaryCondition::none && !w.boundary().empty()) {
        throw ValidationError("boundary_condition",
                              "bc \"none\" needs a closed window (empty boundary); use dirichlet or neumann");
    }
    if (spec_.bc == BoundaryCondition::dirichlet && w.boundary().empty()) {
        throw ValidationError("boundary_condition", "dirichlet bc needs a window with nonempty boundary");
    }
    if (spec_.potential) {
        for (Vertex x : w.interior()) {
            if (!spec_.potential->defined(x)) {
                throw ValidationError("out_of_domain", "potential is not defined at \"" + g.name(x) + "\"");
            }
            if (!std::isfinite(spec_.potential->at(x))) {
                throw ValidationError("non_finite_potential", "potential is not finite at \"" + g.name(x) + "\"");
            }
        }
    }

    const std::size_t n = w.interior().size();
    weights_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex x = w.interior()[i];
        weights_[i] = static_cast<double>(g.degree(x));
        if (weights_[i] == 0.0) {
            throw ValidationError("isolated_vertex", "vertex \"" + g.name(x) + "\" has no neighbors");
        }
    }

    // Symmetric coupling C: (sum_y f(y)) seen from x, after boundary elimination.
    DenseMatrix coupling(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (Vertex y : g.neighbors(w.interior()[i])) {
            if (w.in_interior(y)) coupling(i, w.local_index(y)) += 1.0;
        }
    }
    if (spec_.bc == BoundaryCondition::neumann) {
        for (Vertex z : w.boundary()) {
            std::vector<std::size_t> inner;
            for (Vertex y : g.neighbors(z)) {
                if (w.in_interior(y)) inner.push_back(w.local_index(y));
            }
            const double share = 1.0 / static_cast<double>(inner.size());
            for (std::size_t a : inner) {
                for (std::size_t b : inner) coupling(a, b) += share;
            }
        }
    }

    const double scale = spec_.cfg.scale();
    matrix_ = DenseMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) matrix_(i, j) = -scale * coupling(i, j) / weights_[i];
        matrix_(i, i) += scale;
        if (spec_.potential) matrix_(i, i) += spec_.potential->at(w.interior()[i]);
    }
}

DenseMatrix Operator::symmetric_matrix() const {
    const std::size_t n = size();
    DenseMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            b(i, j) = std::sqrt(weights_[i]) * matrix_(i, j) / std::sqrt(weights_[j]);
        }
    }
    return b;
}

std::vector<double> Operator::restrict(const VertexFunction& f) const {
    const SubgraphWindow& w = window();
    const Graph& g = w.host();
    std::vector<double> local(size());
    double magnitude = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        local[i] = f.at(w.interior()[i]);
        magnitude = std::max(magnitude, std::abs(local[i]));
    }
    for (Vertex z : w.boundary()) {
        if (!f.defined(z)) continue;
        if (spec_.bc == BoundaryCondition::dirichlet && f.at(z) != 0.0) {
            throw ValidationError("boundary_condition", "function is nonzero on boundary vertex \"" + g.name(z) +
                                                            "\" under dirichlet bc");
        }
        if (spec_.bc == BoundaryCondition::neumann) {
            double flux = 0.0;
            for (Vertex y : g.neighbors(z)) {
                if (w.in_interior(y)) flux += f.at(y) - f.at(z);
            }
            if (std::abs(flux) > 1e-9 * (1.0 + magnitude)) {
                throw ValidationError("boundary_condition",
                                      "neumann relation fails at boundary vertex \"" + g.name(z) + "\"");
            }
        }
    }
    return local;
}

VertexFunction Operator::extend(std::span<const double> local) const {
    const SubgraphWindow& w = window();
    const Graph& g = w.host();
    VertexFunction f(g, w.closure());
    for (std::size_t i = 0; i < size(); ++i) f.set(w.interior()[i], local[i]);
    if (spec_.bc == BoundaryCondition::neumann) {
        for (Vertex z : w.boundary()) {
            double sum = 0.0;
            double count = 0.0;
            for (Vertex y : g.neighbors(z)) {
                if (w.in_interior(y)) {
                    sum += local[w.local_index(y)];
                    count += 1.0;
                }
            }
            f.set(z, sum / count);
        }
    }
    return f;
}

double Operator::inner(std::span<const double> a, std::span<const double> b) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < size(); ++i) acc += weights_[i] * a[i] * b[i];
    return acc;
}

// --- EigenSystem -----------------------------------------------------------------

EigenSystem::EigenSystem(Operator op, std::vector<double> values, DenseMatrix local_vectors)
    : op_(std::move(op)), values_(std::move(values)), local_vectors_(std::move(local_vectors)) {
    functions_.reserve(values_.size());
    for (std::size_t j = 0; j < values_.size(); ++j) functions_.push_back(op_.extend(local(j)));
}

std::vector<double> EigenSystem::local(std::size_t j) const {
    std::vector<double> out(op_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = local_vectors_(i, j);
    return out;
}

double EigenSystem::orthonormality_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        const auto a = local(i);
        for (std::size_t j = i; j < size(); ++j) {
            const double ip = op_.inner(a, local(j));
            worst = std::max(worst, std::abs(ip - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double EigenSystem::max_residual() const {
    double worst = 0.0;
    for (std::size_t j = 0; j < size(); ++j) {
        const auto phi = local(j);
        auto r = op_.apply(phi);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= values_[j] * phi[i];
        worst = std::max(worst, std::sqrt(op_.inner(r, r)));
    }
    return worst;
}

EigenSystem eigensystem(const OperatorSpec& spec) {
    Operator op(spec);
    const std::size_t n = op.size();
    if (n > kMaxSpectralSize) {
        throw ValidationError("size_exceeds_bound", "interior of " + std::to_string(n) +
                                                        " vertices exceeds the dense bound " +
                                                        std::to_string(kMaxSpectralSize));
    }
    const auto eig = jacobi_eigen(op.symmetric_matrix());
    DenseMatrix phi(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double inv_sqrt = 1.0 / std::sqrt(op.weights()[i]);
        for (std::size_t j = 0; j < n; ++j) phi(i, j) = eig.vectors(i, j) * inv_sqrt;
    }
    return EigenSystem(std::move(op), eig.values, std::move(phi));
}

// --- Rayleigh quotients ------------------------------------------------------------

double rayleigh_quotient(const VertexFunction& f, const Operator& op) {
    const auto local = op.restrict(f);
    const double mass = op.inner(local, local);
    if (mass == 0.0) throw ValidationError("zero_function", "Rayleigh quotient of the zero function");
    return op.inner(local, op.apply(local)) / mass;
}

double rayleigh_quotient(const VertexFunction& f, const OperatorSpec& spec) {
    return rayleigh_quotient(f, Operator(spec));
}

double max_rayleigh_on_subspace(const Operator& op, const DenseMatrix& basis) {
    const std::size_t n = basis.rows();
    const std::size_t k = basis.cols();
    // Weighted Gram-Schmidt, applied twice for stability.
    std::vector<std::vector<double>> q;
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = basis(i, c);
        const double original = std::sqrt(op.inner(v, v));
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : q) {
                const double proj = op.inner(u, v);
                for (std::size_t i = 0; i < n; ++i) v[i] -= proj * u[i];
            }
        }
        const double len = std::sqrt(op.inner(v, v));
        if (!(len > 1e-12 * original)) {
            throw NumericalError("rank_deficient", "subspace basis is numerically rank deficient");
        }
        for (double& x : v) x /= len;
        q.push_back(std::move(v));
    }
    DenseMatrix projected(k, k);
    std::vector<std::vector<double>> lq;
    for (const auto& u : q) lq.push_back(op.apply(u));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) projected(a, b) = op.inner(q[a], lq[b]);
    }
    return jacobi_eigen(projected).values.back();
}

CourantFischerReport courant_fischer_check(const EigenSystem& es, std::size_t j, Rng& rng,
                                           std::size_t span_samples, std::size_t subspaces, double tolerance) {
    if (j < 1 || j > es.size()) {
        throw ValidationError("index_out_of_range", "eigen index " + std::to_string(j) + " outside 1.." +
                                                        std::to_string(es.size()));
    }
    const Operator& op = es.op();
    const std::size_t n = op.size();
    CourantFischerReport r;
    r.index = j;
    r.claimed_lambda = es.values()[j - 1];

    DenseMatrix span(n, j);
    std::vector<std::vector<double>> phis;
    for (std::size_t c = 0; c < j; ++c) {
        phis.push_back(es.local(c));
        for (std::size_t i = 0; i < n; ++i) span(i, c) = phis.back()[i];
    }
    r.span_max = max_rayleigh_on_subspace(op, span);

    r.sampled_span_max = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < span_samples; ++s) {
        std::vector<double> coef(j);
        double len = 0.0;
        for (double& c : coef) {
            c = rng.normal();
            len += c * c;
        }
        len = std::sqrt(len);
        std::vector<double> f(n, 0.0);
        for (std::size_t c = 0; c < j; ++c) {
            for (std::size_t i = 0; i < n; ++i) f[i] += coef[c] / len * phis[c][i];
        }
        const double e = op.inner(f, op.apply(f)) / op.inner(f, f);
        r.sampled_span_max = std::max(r.sampled_span_max, e);
    }

    r.min_subspace_max = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < subspaces; ++s) {
        DenseMatrix y(n, j);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t c = 0; c < j; ++c) y(i, c) = rng.normal();
        }
        r.min_subspace_max = std::min(r.min_subspace_max, max_rayleigh_on_subspace(op, y));
    }
    if (subspaces == 0) r.min_subspace_max = r.claimed_lambda;
    r.deficit = r.claimed_lambda - r.min_subspace_max;
    r.holds = std::abs(r.span_max - r.claimed_lambda) <= tolerance &&
              r.sampled_span_max <= r.claimed_lambda + tolerance && r.deficit <= tolerance;
    return r;
}

// --- Barta -------------------------------------------------------------------------

BartaResult barta_bound(const SubgraphWindow& w, const std::optional<VertexFunction>& potential,
                        const VertexFunction& u, const CalculusConfig& cfg) {
    const Graph& g = w.host();
    for (Vertex x : w.interior()) {
        if (!(u.at(x) > 0.0)) {
            throw ValidationError("nonpositive_test_function", "test function must be positive on the interior (\"" +
                                                                   g.name(x) + "\")");
        }
    }
    for (Vertex z : w.boundary()) {
        if (!(u.at(z) >= 0.0)) {
            throw ValidationError("nonpositive_test_function",
                                  "test function must be nonnegative on the boundary (\"" + g.name(z) + "\")");
        }
    }
    BartaResult best{std::numeric_limits<double>::infinity(), w.interior().front()};
    for (Vertex x : w.interior()) {
        double lu = -laplacian(u, x, cfg);
        if (potential) lu += potential->at(x) * u.at(x);
        const double ratio = lu / u.at(x);
        if (ratio < best.mu) best = {ratio, x};
    }
    return best;
}

// --- heat kernel and Green function -----------------------------------------------

double HeatKernel::operator()(double t, Vertex x, Vertex y) const {
    if (t < 0.0) throw ValidationError("negative_time", "heat kernel needs t >= 0");
    const SubgraphWindow& w = es_->op().window();
    const std::size_t ix = w.local_index(x);
    const std::size_t iy = w.local_index(y);
    double acc = 0.0;
    for (std::size_t j = 0; j < es_->size(); ++j) {
        const auto& phi = es_->function(j);
        acc += std::exp(-es_->values()[j] * t) * phi.at(w.interior()[ix]) * phi.at(w.interior()[iy]);
    }
    return acc;
}

DenseMatrix HeatKernel::matrix(double t) const {
    if (t < 0.0) throw ValidationError("negative_time", "heat kernel needs t >= 0");
    const std::size_t n = es_->op().size();
    DenseMatrix k(n, n);
    for (std::size_t j = 0; j < es_->size(); ++j) {
        const double decay = std::exp(-es_->values()[j] * t);
        const auto phi = es_->local(j);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) k(a, b) += decay * phi[a] * phi[b];
        }
    }
    return k;
}

VertexFunction HeatKernel::evolve(const VertexFunction& f, double t, Reconstruction mode) const {
    const Operator& op = es_->op();
    const auto& interior = op.window().interior();
    std::vector<double> data(op.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        data[i] = f.at(interior[i]) * (mode == Reconstruction::weighted ? op.weights()[i] : 1.0);
    }
    return op.extend(matrix(t).multiply(data));
}

double heat_kernel_eval(const EigenSystem& es, double t, Vertex x, Vertex y) { return HeatKernel(es)(t, x, y); }

double GreenFunction::operator()(Vertex x, Vertex y) const {
    const SubgraphWindow& w = es_->op().window();
    return local_(w.local_index(x), w.local_index(y));
}

VertexFunction GreenFunction::apply(const VertexFunction& f) const {
    const Operator& op = es_->op();
    const auto& interior = op.window().interior();
    std::vector<double> data(op.size());
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = f.at(interior[i]) * op.weights()[i];
    return op.extend(local_.multiply(data));
}

GreenFunction green_function(const EigenSystem& es) {
    for (std::size_t j = 0; j < es.size(); ++j) {
        if (!(es.values()[j] > 0.0)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "Green function diverges: lambda_" << (j + 1) << " = " << es.values()[j] << " is not positive";
            throw NumericalError("nonpositive_spectrum", msg.str());
        }
    }
    const std::size_t n = es.op().size();
    DenseMatrix g(n, n);
    for (std::size_t j = 0; j < es.size(); ++j) {
        const auto phi = es.local(j);
        const double inv = 1.0 / es.values()[j];
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) g(a, b) += inv * phi[a] * phi[b];
        }
    }
    return GreenFunction(es, std::move(g));
}

}  // namespace graphcalc
