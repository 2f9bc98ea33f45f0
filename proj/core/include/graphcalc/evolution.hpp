// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "graphcalc/calculus.hpp"
#include "graphcalc/spectral.hpp"
#include "graphcalc/vector_field.hpp"
#include "graphcalc/vertex_function.hpp"
#include "graphcalc/window.hpp"

namespace graphcalc {

struct Trajectory {
    std::vector<double> times;  ///< strictly increasing, times[0] = 0
    std::vector<VertexFunction> states;
    std::string scheme;
    double step = 0.0;  ///< uniform step, 0 when the grid is not uniform
};

/// 0 = t_0 < ... < t_N = T with N = ceil(T / dt) equal steps.
/// Throws ValidationError("invalid_time") for T < 0 or dt <= 0.
std::vector<double> uniform_grid(double T, double dt);

/// u(t) = sum_j exp(-lambda_j t) (f, phi_j)_w phi_j, with u(0) = f exactly.
/// Throws ValidationError("boundary_condition") when f violates the bc and
/// ("invalid_time") unless times start at 0 and increase strictly.
Trajectory spectral_heat_solve(const EigenSystem& es, const VertexFunction& f, std::span<const double> times);
Trajectory spectral_heat_solve(const OperatorSpec& spec, const VertexFunction& f, std::span<const double> times);

/// Checks along a uniform trajectory of du/dt + Lu = 0.
struct HeatIdentityReport {
    double step = 0.0;

    /// d/dt ||u||_w^2 + 2 (Lu, u)_w at interior samples (5-point differences).
    std::vector<double> rate_times;
    std::vector<double> rate_residuals;
    double max_rate_residual = 0.0;

    /// F(u) = (Lu, u)_w along the flow, and its largest one-step increase.
    std::vector<double> flow_energy;
    double max_energy_increase = 0.0;
    bool energy_monotone = true;
    /// F(u(t)) + 2 int_0^t ||u_t||_w^2 - F(f), trapezoid in time, worst sample.
    double max_energy_identity_residual = 0.0;
    double max_norm_increase = 0.0;

    /// ||u(T)||^2 + int_0^T (2 int_S |grad u|^2 + 2 (Qu,u)) - ||f||^2 with the
    /// unnormalized gradient energy.
    double literal_l2_residual = 0.0;
    /// The coefficient kappa making ||u(T)||^2 + int_0^T (kappa int_S |grad u|^2 + 2 (Qu,u)) = ||f||^2.
    double measured_gradient_coefficient = 0.0;
    /// E(u(T)) + 2 int_0^T ||u_t||^2 - E(f) for E = int_{closure} |grad u|^2 + (Qu,u).
    double literal_energy_residual = 0.0;
};

/// Throws ValidationError("coarse_grid") when the step exceeds 1e-2, the grid
/// is not uniform, or fewer than 5 samples are given.
HeatIdentityReport heat_identities_report(const Trajectory& traj, const OperatorSpec& spec);

using FieldProvider = std::function<VectorField(double t)>;

/// Classical RK4 on f_t(x) = (1/d_x) sum_y w(t, xy) (f(y) - f(x)) over all vertices.
/// Throws ValidationError("non_finite_field") or ("invalid_time").
Trajectory transport_solve(const Graph& g, const FieldProvider& w, const VertexFunction& f0, double T, double dt);

/// Time profile V(t) or V(t, x) used as lambda_n = V(t_{n-1}).
class Potential {
public:
    using Fn = std::function<double(double t, Vertex x)>;

    static Potential constant(double value);
    static Potential linear(double a, double b);  ///< a + b t
    static Potential sine();                      ///< sin t
    static Potential on_vertices(VertexFunction values);
    static Potential custom(Fn fn, std::string label, bool time_independent);

    double operator()(double t, Vertex x) const { return fn_(t, x); }
    bool time_independent() const noexcept { return time_independent_; }
    const std::string& label() const noexcept { return label_; }

private:
    Potential(Fn fn, std::string label, bool time_independent)
        : fn_(std::move(fn)), label_(std::move(label)), time_independent_(time_independent) {}

    Fn fn_;
    std::string label_;
    bool time_independent_ = true;
};

/// One discrete Morse flow step: the minimizer over u = 0 on dS of
///   F_n(u) = 1/(2h) ||u - u_prev||_w^2 + J_n(u),
///   J_n(u) = scale/2 (-Delta u, u)_w - 1/2 (lambda u, u)_w,
/// whose Euler-Lagrange equation is (u - u_prev)/h = scale Delta u + lambda u on S.
struct DmfStep {
    VertexFunction u;                 ///< on the closure, zero on dS
    double functional_before = 0.0;   ///< F_n(u_prev)
    double functional_after = 0.0;    ///< F_n(u)
    double el_residual = 0.0;         ///< weighted norm of the Euler-Lagrange residual
    double positivity_margin = 0.0;   ///< 1/h + mu_1 - max lambda
    std::vector<std::string> warnings;
};

/// Throws NumericalError("indefinite_step") when 1/h + mu_1 - max lambda <= 0,
/// mu_1 the first Dirichlet eigenvalue of -scale Delta. Warns when
/// max lambda > mu_1 (J_n no longer nonnegative).
DmfStep dmf_step(const VertexFunction& u_prev, double h, double lambda, const SubgraphWindow& w,
                 const CalculusConfig& cfg = {});
DmfStep dmf_step(const VertexFunction& u_prev, double h, const VertexFunction& lambda, const SubgraphWindow& w,
                 const CalculusConfig& cfg = {});

struct DmfLedgerEntry {
    std::size_t n = 0;
    double t = 0.0;                  ///< t_n
    double lambda_max = 0.0;
    double functional_before = 0.0;  ///< F_n(u_{n-1})
    double functional_after = 0.0;   ///< F_n(u_n)
    double j_before = 0.0;           ///< J_n(u_{n-1})
    double j_after = 0.0;            ///< J_n(u_n)
    double kinetic = 0.0;            ///< (1/2h) ||u_n - u_{n-1}||_w^2
    double correction = 0.0;         ///< J_n(u_{n-1}) - J_{n-1}(u_{n-1}); 0 for n = 1
    double el_residual = 0.0;
};

class DMFRun {
public:
    double T = 0.0;
    double h = 0.0;
    std::vector<VertexFunction> lambdas;  ///< lambda_n on S, n = 1..N
    std::vector<VertexFunction> steps;    ///< u_0 .. u_N on the closure
    std::vector<DmfLedgerEntry> ledger;   ///< n = 1..N
    std::vector<std::string> warnings;

    /// sum_n kinetic_n + J_N(u_N) against J_1(u_0) + sum_n correction_n.
    double a_priori_lhs = 0.0;
    double a_priori_rhs = 0.0;
    bool a_priori_holds = false;

    /// u_N(t): linear between t_{n-1} and t_n, t in [0, T].
    VertexFunction linear(double t) const;
    /// u_hat_N(t) = u_n on (t_{n-1}, t_n], = phi on [-h, 0].
    VertexFunction piecewise(double t) const;
};

/// h = T/N, lambda_n = V(t_{n-1}), N implicit steps from phi (zero on dS).
DMFRun dmf_run(const VertexFunction& phi, const Potential& V, double T, std::size_t N, const SubgraphWindow& w,
               const CalculusConfig& cfg = {});

struct ConvergenceReport {
    std::vector<std::size_t> Ns;
    std::vector<double> steps;          ///< h per entry of `errors`
    std::vector<double> errors;         ///< sup over nodes of ||u_hat_N - reference||_w
    std::vector<double> endpoint_errors;
    double order = 0.0;                 ///< least-squares slope of log error vs log h
    double endpoint_order = 0.0;
    bool self_convergence = false;      ///< reference = next finer run instead of the spectral solution
};

/// Time-independent V: errors against the spectral solution of
/// -scale Delta - V with Dirichlet data. Otherwise Cauchy differences
/// between consecutive runs, which then must double N.
ConvergenceReport dmf_convergence_study(const VertexFunction& phi, const Potential& V, double T,
                                        std::span<const std::size_t> Ns, const SubgraphWindow& w,
                                        const CalculusConfig& cfg = {});

}  // namespace graphcalc
