// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "graphcalc/error.hpp"
#include "graphcalc/linalg.hpp"

namespace graphcalc {

std::vector<double> uniform_grid(double T, double dt) {
    if (!(T >= 0.0) || !std::isfinite(T)) throw ValidationError("invalid_time", "final time must be >= 0");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("invalid_time", "time step must be > 0");
    const auto n = static_cast<std::size_t>(std::max(0.0, std::ceil(T / dt - 1e-9)));
    std::vector<double> times(n + 1);
    for (std::size_t k = 0; k <= n; ++k) times[k] = n == 0 ? 0.0 : T * static_cast<double>(k) / static_cast<double>(n);
    return times;
}

namespace {

void check_times(std::span<const double> times) {
    if (times.empty() || times[0] != 0.0) throw ValidationError("invalid_time", "sample times must start at 0");
    for (std::size_t k = 1; k < times.size(); ++k) {
        if (!(times[k] > times[k - 1]) || !std::isfinite(times[k])) {
            throw ValidationError("invalid_time", "sample times must increase strictly");
        }
    }
}

double uniform_step(std::span<const double> times) {
    if (times.size() < 2) return 0.0;
    const double h = times[1] - times[0];
    for (std::size_t k = 2; k < times.size(); ++k) {
        if (std::abs((times[k] - times[k - 1]) - h) > 1e-9 * h) return 0.0;
    }
    return h;
}

std::vector<double> local_values(const VertexFunction& f, const VertexSet& vertices) {
    std::vector<double> out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) out[i] = f.at(vertices[i]);
    return out;
}

}  // namespace

Trajectory spectral_heat_solve(const EigenSystem& es, const VertexFunction& f, std::span<const double> times) {
    check_times(times);
    const Operator& op = es.op();
    const auto f_local = op.restrict(f);
    std::vector<double> coeff(es.size());
    for (std::size_t j = 0; j < es.size(); ++j) coeff[j] = op.inner(f_local, es.local(j));

    Trajectory traj;
    traj.scheme = "spectral";
    traj.step = uniform_step(times);
    traj.times.assign(times.begin(), times.end());
    traj.states.push_back(op.extend(f_local));
    std::vector<std::vector<double>> modes;
    for (std::size_t j = 0; j < es.size(); ++j) modes.push_back(es.local(j));
    for (std::size_t k = 1; k < times.size(); ++k) {
        std::vector<double> u(op.size(), 0.0);
        for (std::size_t j = 0; j < es.size(); ++j) {
            const double a = coeff[j] * std::exp(-es.values()[j] * times[k]);
            for (std::size_t i = 0; i < u.size(); ++i) u[i] += a * modes[j][i];
        }
        traj.states.push_back(op.extend(u));
    }
    return traj;
}

Trajectory spectral_heat_solve(const OperatorSpec& spec, const VertexFunction& f, std::span<const double> times) {
    const auto es = eigensystem(spec);
    return spectral_heat_solve(es, f, times);
}

HeatIdentityReport heat_identities_report(const Trajectory& traj, const OperatorSpec& spec) {
    check_times(traj.times);
    const double dt = uniform_step(traj.times);
    if (traj.times.size() < 5 || dt == 0.0 || dt > 1e-2) {
        throw ValidationError("coarse_grid", "identity checks need >= 5 uniform samples with step <= 1e-2");
    }
    const Operator op(spec);
    const SubgraphWindow& w = op.window();
    const std::size_t m = traj.times.size();

    std::vector<double> mass(m), energy(m), lu_sq(m), grad_s(m), grad_closure(m), potential(m);
    for (std::size_t k = 0; k < m; ++k) {
        const auto u = local_values(traj.states[k], w.interior());
        const auto lu = op.apply(u);
        mass[k] = op.inner(u, u);
        energy[k] = op.inner(lu, u);
        lu_sq[k] = op.inner(lu, lu);
        double pot = 0.0;
        if (spec.potential) {
            for (std::size_t i = 0; i < u.size(); ++i) {
                pot += op.weights()[i] * spec.potential->at(w.interior()[i]) * u[i] * u[i];
            }
        }
        potential[k] = pot;
        grad_s[k] = dirichlet_energy(traj.states[k], w);
        double closure_sum = 0.0;
        for (Vertex x : w.closure()) {
            for (Vertex y : w.host().neighbors(x)) {
                if (!w.in_closure(y)) continue;
                const double d = traj.states[k].at(y) - traj.states[k].at(x);
                closure_sum += d * d;
            }
        }
        grad_closure[k] = closure_sum;
    }

    HeatIdentityReport r;
    r.step = dt;
    for (std::size_t k = 2; k + 2 < m; ++k) {
        const double rate = (mass[k - 2] - 8.0 * mass[k - 1] + 8.0 * mass[k + 1] - mass[k + 2]) / (12.0 * dt);
        const double res = rate + 2.0 * energy[k];
        r.rate_times.push_back(traj.times[k]);
        r.rate_residuals.push_back(res);
        r.max_rate_residual = std::max(r.max_rate_residual, std::abs(res));
    }

    r.flow_energy = energy;
    const double energy_tol = 1e-12 * (1.0 + std::abs(energy[0]));
    double dissipated = 0.0;     // int_0^t ||Lu||^2
    double grad_integral = 0.0;  // int_0^t int_S |grad u|^2
    double pot_integral = 0.0;   // int_0^t (Qu, u)
    for (std::size_t k = 1; k < m; ++k) {
        r.max_energy_increase = std::max(r.max_energy_increase, energy[k] - energy[k - 1]);
        r.max_norm_increase = std::max(r.max_norm_increase, mass[k] - mass[k - 1]);
        dissipated += 0.5 * dt * (lu_sq[k] + lu_sq[k - 1]);
        grad_integral += 0.5 * dt * (grad_s[k] + grad_s[k - 1]);
        pot_integral += 0.5 * dt * (potential[k] + potential[k - 1]);
        r.max_energy_identity_residual =
            std::max(r.max_energy_identity_residual, std::abs(energy[k] + 2.0 * dissipated - energy[0]));
    }
    r.energy_monotone = r.max_energy_increase <= energy_tol;

    const std::size_t last = m - 1;
    r.literal_l2_residual = mass[last] + 2.0 * grad_integral + 2.0 * pot_integral - mass[0];
    r.measured_gradient_coefficient =
        grad_integral > 0.0 ? (mass[0] - mass[last] - 2.0 * pot_integral) / grad_integral : 0.0;
    r.literal_energy_residual =
        (grad_closure[last] + potential[last]) + 2.0 * dissipated - (grad_closure[0] + potential[0]);
    return r;
}

Trajectory transport_solve(const Graph& g, const FieldProvider& w, const VertexFunction& f0, double T, double dt) {
    const auto times = uniform_grid(T, dt);
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> all(n);
    for (Vertex x = 0; x < n; ++x) all[x] = x;
    f0.require(all);

    auto rhs = [&](double t, const std::vector<double>& f) {
        const VectorField field = w(t);
        field.require(all);
        std::vector<double> out(n, 0.0);
        for (Vertex x = 0; x < n; ++x) {
            const auto nb = g.neighbors(x);
            if (nb.empty()) continue;
            const auto values = field.at(x);
            double acc = 0.0;
            for (std::size_t k = 0; k < nb.size(); ++k) {
                if (!std::isfinite(values[k])) {
                    throw ValidationError("non_finite_field", "field value on (" + g.name(x) + ", " +
                                                                  g.name(nb[k]) + ") is not finite");
                }
                acc += values[k] * (f[nb[k]] - f[x]);
            }
            out[x] = acc / static_cast<double>(nb.size());
        }
        return out;
    };

    Trajectory traj;
    traj.scheme = "rk4";
    traj.times = times;
    traj.step = times.size() > 1 ? times[1] - times[0] : 0.0;
    std::vector<double> f(n);
    for (Vertex x = 0; x < n; ++x) f[x] = f0.at(x);
    traj.states.push_back(VertexFunction::on_all(g, f));
    for (std::size_t k = 1; k < times.size(); ++k) {
        const double t = times[k - 1];
        const double h = times[k] - t;
        auto shifted = [&](const std::vector<double>& slope, double factor) {
            std::vector<double> out(f);
            for (std::size_t i = 0; i < n; ++i) out[i] += factor * h * slope[i];
            return out;
        };
        const auto k1 = rhs(t, f);
        const auto k2 = rhs(t + 0.5 * h, shifted(k1, 0.5));
        const auto k3 = rhs(t + 0.5 * h, shifted(k2, 0.5));
        const auto k4 = rhs(t + h, shifted(k3, 1.0));
        for (std::size_t i = 0; i < n; ++i) f[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        traj.states.push_back(VertexFunction::on_all(g, f));
    }
    return traj;
}

// --- potentials --------------------------------------------------------------------

Potential Potential::constant(double value) {
    std::ostringstream label;
    label.precision(17);
    label << "const:" << value;
    return Potential([value](double, Vertex) { return value; }, label.str(), true);
}

Potential Potential::linear(double a, double b) {
    std::ostringstream label;
    label.precision(17);
    label << "linear:" << a << "," << b;
    return Potential([a, b](double t, Vertex) { return a + b * t; }, label.str(), b == 0.0);
}

Potential Potential::sine() {
    return Potential([](double t, Vertex) { return std::sin(t); }, "sin", false);
}

Potential Potential::on_vertices(VertexFunction values) {
    return Potential([values = std::move(values)](double, Vertex x) { return values.at(x); }, "vertices", true);
}

Potential Potential::custom(Fn fn, std::string label, bool time_independent) {
    return Potential(std::move(fn), std::move(label), time_independent);
}

// --- discrete Morse flow -------------------------------------------------------------

namespace {

// Dirichlet data on a window in local coordinates: weights d_x and the
// stiffness K = D - A_SS, so that (-Delta u, u)_w = u^T K u.
struct StepSystem {
    const SubgraphWindow* w;
    std::vector<double> d;
    DenseMatrix stiffness;
    double scale;
    double mu1;  // first Dirichlet eigenvalue of -scale Delta

    StepSystem(const SubgraphWindow& win, const CalculusConfig& cfg) : w(&win), scale(cfg.scale()) {
        const Graph& g = win.host();
        const std::size_t n = win.interior().size();
        d.resize(n);
        stiffness = DenseMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const Vertex x = win.interior()[i];
            d[i] = static_cast<double>(g.degree(x));
            stiffness(i, i) = d[i];
            for (Vertex y : g.neighbors(x)) {
                if (win.in_interior(y)) stiffness(i, win.local_index(y)) -= 1.0;
            }
        }
        const auto es = eigensystem(OperatorSpec{win, std::nullopt, BoundaryCondition::dirichlet, cfg});
        mu1 = es.values().front();
    }

    double weighted(std::span<const double> a, std::span<const double> b) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i) acc += d[i] * a[i] * b[i];
        return acc;
    }

    double j(std::span<const double> u, std::span<const double> lambda) const {
        const auto ku = stiffness.multiply(u);
        double pot = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i) pot += d[i] * lambda[i] * u[i] * u[i];
        return 0.5 * scale * dot(u, ku) - 0.5 * pot;
    }

    double functional(std::span<const double> u, std::span<const double> prev, std::span<const double> lambda,
                      double h) const {
        std::vector<double> diff(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - prev[i];
        return weighted(diff, diff) / (2.0 * h) + j(u, lambda);
    }

    std::vector<double> restrict_dirichlet(const VertexFunction& f) const {
        const Graph& g = w->host();
        for (Vertex z : w->boundary()) {
            if (f.defined(z) && f.at(z) != 0.0) {
                throw ValidationError("boundary_condition",
                                      "data must vanish on boundary vertex \"" + g.name(z) + "\"");
            }
        }
        return local_values(f, w->interior());
    }

    VertexFunction extend(std::span<const double> u) const {
        VertexFunction f(w->host(), w->closure());
        for (std::size_t i = 0; i < u.size(); ++i) f.set(w->interior()[i], u[i]);
        return f;
    }

    struct Solved {
        std::vector<double> u;
        DmfStep report;
    };

    Solved solve(std::span<const double> prev, double h, std::span<const double> lambda) const {
        if (!(h > 0.0) || !std::isfinite(h)) throw ValidationError("invalid_time", "step size must be > 0");
        const std::size_t n = d.size();
        const double lambda_max = *std::max_element(lambda.begin(), lambda.end());
        Solved out;
        out.report.positivity_margin = 1.0 / h + mu1 - lambda_max;
        if (!(out.report.positivity_margin > 0.0)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "step system is not positive definite: 1/h = " << 1.0 / h << ", mu_1 = " << mu1
                << ", max lambda = " << lambda_max;
            throw NumericalError("indefinite_step", msg.str());
        }
        if (lambda_max > mu1) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "max lambda = " << lambda_max << " exceeds mu_1 = " << mu1 << "; J_n is not nonnegative";
            out.report.warnings.push_back(msg.str());
        }
        DenseMatrix a(n, n);
        std::vector<double> rhs(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) a(i, k) = scale * stiffness(i, k);
            a(i, i) += d[i] / h - d[i] * lambda[i];
            rhs[i] = d[i] * prev[i] / h;
        }
        const Cholesky chol(a);
        out.u = chol.solve_refined(a, rhs);

        // Euler-Lagrange residual (u - prev)/h - scale Delta u - lambda u, Delta u = -D^{-1} K u.
        const auto ku = stiffness.multiply(out.u);
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = (out.u[i] - prev[i]) / h + scale * ku[i] / d[i] - lambda[i] * out.u[i];
        }
        out.report.el_residual = std::sqrt(weighted(r, r));
        out.report.functional_before = functional(prev, prev, lambda, h);
        out.report.functional_after = functional(out.u, prev, lambda, h);
        out.report.u = extend(out.u);
        return out;
    }
};

std::vector<double> lambda_on(const SubgraphWindow& w, const Potential& V, double t) {
    std::vector<double> out(w.interior().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = V(t, w.interior()[i]);
        if (!std::isfinite(out[i])) throw ValidationError("non_finite_potential", "potential is not finite");
    }
    return out;
}

}  // namespace

DmfStep dmf_step(const VertexFunction& u_prev, double h, double lambda, const SubgraphWindow& w,
                 const CalculusConfig& cfg) {
    const StepSystem sys(w, cfg);
    const std::vector<double> lam(w.interior().size(), lambda);
    return sys.solve(sys.restrict_dirichlet(u_prev), h, lam).report;
}

DmfStep dmf_step(const VertexFunction& u_prev, double h, const VertexFunction& lambda, const SubgraphWindow& w,
                 const CalculusConfig& cfg) {
    const StepSystem sys(w, cfg);
    return sys.solve(sys.restrict_dirichlet(u_prev), h, local_values(lambda, w.interior())).report;
}

DMFRun dmf_run(const VertexFunction& phi, const Potential& V, double T, std::size_t N, const SubgraphWindow& w,
               const CalculusConfig& cfg) {
    if (N < 1) throw ValidationError("invalid_steps", "N must be >= 1");
    if (!(T > 0.0) || !std::isfinite(T)) throw ValidationError("invalid_time", "T must be > 0");
    const StepSystem sys(w, cfg);
    DMFRun run;
    run.T = T;
    run.h = T / static_cast<double>(N);

    std::vector<double> u = sys.restrict_dirichlet(phi);
    run.steps.push_back(sys.extend(u));
    std::vector<double> prev_lambda;
    double j_first = 0.0;
    double kinetic_sum = 0.0;
    double correction_sum = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        const double t_prev = run.h * static_cast<double>(n - 1);
        const auto lambda = lambda_on(w, V, t_prev);
        auto solved = sys.solve(u, run.h, lambda);

        DmfLedgerEntry e;
        e.n = n;
        e.t = run.h * static_cast<double>(n);
        e.lambda_max = *std::max_element(lambda.begin(), lambda.end());
        e.functional_before = solved.report.functional_before;
        e.functional_after = solved.report.functional_after;
        e.j_before = sys.j(u, lambda);
        e.j_after = sys.j(solved.u, lambda);
        std::vector<double> diff(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) diff[i] = solved.u[i] - u[i];
        e.kinetic = sys.weighted(diff, diff) / (2.0 * run.h);
        e.correction = n == 1 ? 0.0 : e.j_before - sys.j(u, prev_lambda);
        e.el_residual = solved.report.el_residual;
        if (n == 1) j_first = e.j_before;
        kinetic_sum += e.kinetic;
        correction_sum += e.correction;
        for (auto& msg : solved.report.warnings) run.warnings.push_back("step " + std::to_string(n) + ": " + msg);

        run.ledger.push_back(e);
        run.lambdas.push_back(VertexFunction(w.host(), w.interior()));
        for (std::size_t i = 0; i < lambda.size(); ++i) run.lambdas.back().set(w.interior()[i], lambda[i]);
        run.steps.push_back(solved.report.u);
        u = std::move(solved.u);
        prev_lambda = lambda;
    }
    run.a_priori_lhs = kinetic_sum + run.ledger.back().j_after;
    run.a_priori_rhs = j_first + correction_sum;
    run.a_priori_holds = run.a_priori_lhs <= run.a_priori_rhs + 1e-12 * (1.0 + std::abs(run.a_priori_rhs));
    return run;
}

VertexFunction DMFRun::linear(double t) const {
    if (!(t >= 0.0 && t <= T)) throw ValidationError("invalid_time", "interpolant is defined on [0, T]");
    const std::size_t N = steps.size() - 1;
    auto n = static_cast<std::size_t>(std::ceil(t / h - 1e-12));
    n = std::clamp<std::size_t>(n, 1, N);
    const double t_n = h * static_cast<double>(n);
    const double a = (t_n - t) / h;
    return steps[n - 1].combine(a, steps[n], 1.0 - a);
}

VertexFunction DMFRun::piecewise(double t) const {
    if (!(t >= -h && t <= T)) throw ValidationError("invalid_time", "piecewise interpolant is defined on [-h, T]");
    if (t <= 0.0) return steps.front();
    const std::size_t N = steps.size() - 1;
    auto n = static_cast<std::size_t>(std::ceil(t / h - 1e-12));
    return steps[std::clamp<std::size_t>(n, 1, N)];
}

namespace {

double fit_order(const std::vector<double>& h, const std::vector<double>& err) {
    std::vector<double> x, y;
    for (std::size_t k = 0; k < err.size(); ++k) {
        if (err[k] > 0.0) {
            x.push_back(std::log(h[k]));
            y.push_back(std::log(err[k]));
        }
    }
    if (x.size() < 2) return 0.0;
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sxy += (x[k] - mx) * (y[k] - my);
        sxx += (x[k] - mx) * (x[k] - mx);
    }
    return sxy / sxx;
}

double weighted_distance(const VertexFunction& a, const VertexFunction& b, const SubgraphWindow& w) {
    const VertexFunction diff = a.combine(1.0, b, -1.0);
    return std::sqrt(weighted_inner(diff, diff, w));
}

}  // namespace

ConvergenceReport dmf_convergence_study(const VertexFunction& phi, const Potential& V, double T,
                                        std::span<const std::size_t> Ns, const SubgraphWindow& w,
                                        const CalculusConfig& cfg) {
    if (Ns.size() < 2) throw ValidationError("invalid_steps", "convergence study needs at least two N values");
    for (std::size_t k = 1; k < Ns.size(); ++k) {
        if (Ns[k] <= Ns[k - 1]) throw ValidationError("invalid_steps", "N values must increase");
    }
    ConvergenceReport r;
    r.Ns.assign(Ns.begin(), Ns.end());
    r.self_convergence = !V.time_independent();
    std::vector<DMFRun> runs;
    for (std::size_t N : Ns) runs.push_back(dmf_run(phi, V, T, N, w, cfg));

    if (!r.self_convergence) {
        VertexFunction q(w.host(), w.interior());
        for (Vertex x : w.interior()) q.set(x, -V(0.0, x));
        const auto es = eigensystem(OperatorSpec{w, q, BoundaryCondition::dirichlet, cfg});
        for (const auto& run : runs) {
            const std::size_t N = run.steps.size() - 1;
            std::vector<double> nodes(N + 1);
            for (std::size_t n = 0; n <= N; ++n) nodes[n] = run.h * static_cast<double>(n);
            const auto exact = spectral_heat_solve(es, phi, nodes);
            double sup = 0.0;
            for (std::size_t n = 1; n <= N; ++n) {
                sup = std::max(sup, weighted_distance(run.steps[n], exact.states[n - 1], w));
                sup = std::max(sup, weighted_distance(run.steps[n], exact.states[n], w));
            }
            r.steps.push_back(run.h);
            r.errors.push_back(sup);
            r.endpoint_errors.push_back(weighted_distance(run.steps[N], exact.states[N], w));
        }
    } else {
        for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
            const auto& coarse = runs[k];
            const auto& fine = runs[k + 1];
            const std::size_t Nc = coarse.steps.size() - 1;
            const std::size_t Nf = fine.steps.size() - 1;
            if (Nf != 2 * Nc) {
                throw ValidationError("invalid_steps", "self-convergence needs each N to double the previous");
            }
            double sup = 0.0;
            for (std::size_t m = 1; m <= Nf; ++m) {
                sup = std::max(sup, weighted_distance(fine.steps[m], coarse.steps[(m + 1) / 2], w));
            }
            r.steps.push_back(coarse.h);
            r.errors.push_back(sup);
            r.endpoint_errors.push_back(weighted_distance(fine.steps[Nf], coarse.steps[Nc], w));
        }
    }
    r.order = fit_order(r.steps, r.errors);
    r.endpoint_order = fit_order(r.steps, r.endpoint_errors);
    return r;
}

}  // namespace graphcalc
