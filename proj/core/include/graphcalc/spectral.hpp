// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphcalc/calculus.hpp"
#include "graphcalc/linalg.hpp"
#include "graphcalc/random.hpp"
#include "graphcalc/vertex_function.hpp"
#include "graphcalc/window.hpp"

namespace graphcalc {

enum class BoundaryCondition { dirichlet, neumann, none };

BoundaryCondition parse_boundary_condition(std::string_view text);
std::string to_string(BoundaryCondition bc);

/// L = -scale * Lap + Q on a window interior.
///
/// dirichlet: functions vanish on dS; boundary neighbors still count in d_x.
/// neumann:   boundary values are eliminated through
///            sum_{y in S, y ~ x} (f(y) - f(x)) = 0 for x in dS,
///            i.e. f(x) is the mean of its interior neighbors.
/// none:      the window must be closed (empty boundary).
struct OperatorSpec {
    SubgraphWindow window;
    std::optional<VertexFunction> potential;  ///< Q on S; absent means Q = 0
    BoundaryCondition bc = BoundaryCondition::none;
    CalculusConfig cfg;
};

/// Largest interior handled by the dense eigensolver.
inline constexpr std::size_t kMaxSpectralSize = 2000;

/// The assembled operator acting on interior values in local order.
class Operator {
public:
    /// Throws ValidationError for a non-finite or partial potential, Dirichlet
    /// without boundary, or "none" on a window that has a boundary.
    explicit Operator(OperatorSpec spec);

    const OperatorSpec& spec() const noexcept { return spec_; }
    const SubgraphWindow& window() const noexcept { return spec_.window; }
    std::size_t size() const noexcept { return weights_.size(); }

    /// d_x for the interior in local order.
    std::span<const double> weights() const noexcept { return weights_; }

    /// (L f)|_S = matrix() * f|_S.
    const DenseMatrix& matrix() const noexcept { return matrix_; }

    /// D^{1/2} M D^{-1/2}; symmetric because L is self-adjoint in the weighted product.
    DenseMatrix symmetric_matrix() const;

    /// Interior values of f. Throws ValidationError("boundary_condition") when f
    /// is defined on dS but violates the boundary condition there.
    std::vector<double> restrict(const VertexFunction& f) const;

    /// Function on the closure, boundary values filled in per the boundary condition.
    VertexFunction extend(std::span<const double> local) const;

    std::vector<double> apply(std::span<const double> local) const { return matrix_.multiply(local); }

    double inner(std::span<const double> a, std::span<const double> b) const;

private:
    OperatorSpec spec_;
    std::vector<double> weights_;
    DenseMatrix matrix_;
};

/// Ascending spectrum of L with eigenfunctions orthonormal in the
/// degree-weighted product over S.
class EigenSystem {
public:
    EigenSystem(Operator op, std::vector<double> values, DenseMatrix local_vectors);

    const Operator& op() const noexcept { return op_; }
    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<double>& values() const noexcept { return values_; }

    /// phi_j on the closure (boundary values per the boundary condition).
    const VertexFunction& function(std::size_t j) const { return functions_.at(j); }
    /// phi_j on S in local order.
    std::vector<double> local(std::size_t j) const;

    /// max |(phi_i, phi_j)_w - delta_ij|.
    double orthonormality_defect() const;
    /// max_j ||L phi_j - lambda_j phi_j||_w.
    double max_residual() const;

private:
    Operator op_;
    std::vector<double> values_;
    DenseMatrix local_vectors_;  ///< column j = phi_j on S
    std::vector<VertexFunction> functions_;
};

/// Full spectrum by degree conjugation and Jacobi sweeps.
/// Throws ValidationError("size_exceeds_bound") above kMaxSpectralSize.
EigenSystem eigensystem(const OperatorSpec& spec);

/// (f, Lf)_w / (f, f)_w over S. Throws ValidationError("zero_function").
double rayleigh_quotient(const VertexFunction& f, const Operator& op);
double rayleigh_quotient(const VertexFunction& f, const OperatorSpec& spec);

/// Max of the Rayleigh quotient over span(columns of `basis`), local coordinates.
double max_rayleigh_on_subspace(const Operator& op, const DenseMatrix& basis);

struct CourantFischerReport {
    std::size_t index = 0;           ///< j, 1-based
    double claimed_lambda = 0.0;     ///< lambda_j
    double span_max = 0.0;           ///< analytic max over span(phi_1..phi_j)
    double sampled_span_max = 0.0;   ///< max over random unit combinations
    double min_subspace_max = 0.0;   ///< min over random j-dim subspaces of max E
    double deficit = 0.0;            ///< lambda_j - min_subspace_max (<= ~0 expected)
    bool holds = false;
};

/// Checks that lambda_j is the least level whose sublevel set contains a
/// (j-1)-dimensional projective subspace: the span of the first j
/// eigenfunctions attains max E = lambda_j, and no random j-dimensional
/// subspace does better.
CourantFischerReport courant_fischer_check(const EigenSystem& es, std::size_t j, Rng& rng,
                                           std::size_t span_samples = 200, std::size_t subspaces = 50,
                                           double tolerance = 1e-9);

struct BartaResult {
    double mu = 0.0;
    Vertex argmin = 0;
};

/// mu = min_{x in S} (Lu)(x) / u(x), with Lu evaluated from u on the closure.
/// Requires u > 0 on S and u >= 0 on dS (ValidationError("nonpositive_test_function")).
BartaResult barta_bound(const SubgraphWindow& w, const std::optional<VertexFunction>& potential,
                        const VertexFunction& u, const CalculusConfig& cfg = {});

enum class Reconstruction { weighted, unweighted };

/// S_t(x, y) = sum_j exp(-lambda_j t) phi_j(x) phi_j(y). Holds a pointer to
/// the eigensystem, which must outlive it.
class HeatKernel {
public:
    explicit HeatKernel(const EigenSystem& es) : es_(&es) {}

    /// Throws ValidationError("negative_time").
    double operator()(double t, Vertex x, Vertex y) const;

    /// Kernel matrix over S in local order.
    DenseMatrix matrix(double t) const;

    /// u(x, t) = sum_y S_t(x, y) f(y) d_y (weighted) or without d_y (unweighted).
    /// The weighted form reproduces f at t = 0.
    VertexFunction evolve(const VertexFunction& f, double t, Reconstruction mode = Reconstruction::weighted) const;

private:
    const EigenSystem* es_;
};

double heat_kernel_eval(const EigenSystem& es, double t, Vertex x, Vertex y);

/// G(x, y) = sum_j phi_j(x) phi_j(y) / lambda_j, the time integral of the heat kernel.
class GreenFunction {
public:
    GreenFunction(const EigenSystem& es, DenseMatrix local) : es_(&es), local_(std::move(local)) {}

    double operator()(Vertex x, Vertex y) const;
    const DenseMatrix& matrix() const noexcept { return local_; }

    /// sum_y G(., y) f(y) d_y; inverts L.
    VertexFunction apply(const VertexFunction& f) const;

private:
    const EigenSystem* es_;
    DenseMatrix local_;
};

/// Throws NumericalError("nonpositive_spectrum") naming the offending eigenvalue.
GreenFunction green_function(const EigenSystem& es);

}  // namespace graphcalc
