// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "csv.hpp"
#include "graphcalc/error.hpp"

namespace graphcalc {

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

SpherePoint::SpherePoint(double x, double y, double z) {
    const double len = std::sqrt(x * x + y * y + z * z);
    if (!(len > 0.0) || !std::isfinite(len)) {
        throw ValidationError("zero_vector", "sphere point needs a finite nonzero vector");
    }
    c_ = {x / len, y / len, z / len};
}

double sphere_distance(const SpherePoint& p, const SpherePoint& q) {
    return std::atan2(norm3(cross3(p.coords(), q.coords())), dot3(p.coords(), q.coords()));
}

Vec3 sphere_log(const SpherePoint& p, const SpherePoint& q) {
    const Vec3& a = p.coords();
    const Vec3& b = q.coords();
    const double s = norm3(cross3(a, b));
    const double c = dot3(a, b);
    if (c < 0.0 && s < 1e-12) throw NumericalError("antipodal", "logarithm of an antipodal pair is undefined");
    const double theta = std::atan2(s, c);
    const double factor = s < 1e-8 ? 1.0 + theta * theta / 6.0 : theta / s;
    return {factor * (b[0] - c * a[0]), factor * (b[1] - c * a[1]), factor * (b[2] - c * a[2])};
}

SpherePoint sphere_exp(const SpherePoint& p, const Vec3& v) {
    const Vec3& a = p.coords();
    const double len = norm3(v);
    const double sinc = len < 1e-8 ? 1.0 - len * len / 6.0 : std::sin(len) / len;
    const double c = std::cos(len);
    return SpherePoint(c * a[0] + sinc * v[0], c * a[1] + sinc * v[1], c * a[2] + sinc * v[2]);
}

const SpherePoint& SphereMap::at(Vertex v) const {
    if (!defined(v)) {
        throw ValidationError("out_of_domain", "map is not defined at vertex " +
                                                   (host_ && v < host_->vertex_count() ? "\"" + host_->name(v) + "\""
                                                                                       : std::to_string(v)));
    }
    return *values_[v];
}

void SphereMap::set(Vertex v, const SpherePoint& p) {
    host_->check_vertex(v);
    values_[v] = p;
}

VertexSet SphereMap::domain() const {
    VertexSet out;
    for (Vertex v = 0; v < values_.size(); ++v) {
        if (values_[v]) out.push_back(v);
    }
    return out;
}

SphereMap load_sphere_map(const Graph& g, std::string_view csv_text) {
    const auto table = detail::parse_csv(csv_text, {"vertex", "x", "y", "z"});
    SphereMap u(g);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::size_t line = table.line_numbers[r];
        const Vertex v = g.index_of(row[0]);
        if (u.defined(v)) {
            throw ValidationError("parse_error", "CSV line " + std::to_string(line) + ": vertex \"" + row[0] +
                                                     "\" listed twice");
        }
        try {
            u.set(v, SpherePoint(detail::parse_real(row[1], line), detail::parse_real(row[2], line),
                                 detail::parse_real(row[3], line)));
        } catch (const ValidationError& e) {
            if (e.kind() != "zero_vector") throw;
            throw ValidationError("parse_error", "CSV line " + std::to_string(line) + ": zero vector");
        }
    }
    return u;
}

double energy_roundoff(double energy) {
    return 16.0 * std::numeric_limits<double>::epsilon() * std::max(energy, 1.0);
}

double map_energy(const SphereMap& u, const SubgraphWindow& w) {
    const Graph& g = w.host();
    double total = 0.0;
    for (Vertex x : w.closure()) {
        for (Vertex y : g.neighbors(x)) {
            if (y <= x || !w.in_closure(y)) continue;
            const double d = sphere_distance(u.at(x), u.at(y));
            total += d * d;
        }
    }
    return total;
}

namespace {

void require_interior(const SubgraphWindow& w, Vertex x) {
    if (!w.in_interior(x)) {
        throw ValidationError("out_of_domain", "vertex \"" + w.host().name(x) + "\" is not in the interior");
    }
}

}  // namespace

Vec3 first_variation(const SphereMap& u, const SubgraphWindow& w, Vertex x) {
    require_interior(w, x);
    const Graph& g = w.host();
    Vec3 acc{0.0, 0.0, 0.0};
    for (Vertex y : g.neighbors(x)) {
        const Vec3 l = sphere_log(u.at(x), u.at(y));
        for (int k = 0; k < 3; ++k) acc[k] -= l[k];
    }
    const double d = static_cast<double>(g.degree(x));
    for (double& v : acc) v /= d;
    return acc;
}

Vec3 ambient_residual(const SphereMap& u, const SubgraphWindow& w, Vertex x) {
    require_interior(w, x);
    const Graph& g = w.host();
    const Vec3& p = u.at(x).coords();
    Vec3 div_w{0.0, 0.0, 0.0};
    Vec3 m{0.0, 0.0, 0.0};
    for (Vertex y : g.neighbors(x)) {
        const double d = sphere_distance(u.at(x), u.at(y));
        if (d == 0.0) continue;
        const Vec3 lp = sphere_log(u.at(x), u.at(y));  // at p, toward q
        const Vec3 lq = sphere_log(u.at(y), u.at(x));  // at q, toward p
        for (int k = 0; k < 3; ++k) {
            const double d1 = -lp[k] / d;  // gradient of d in the first slot
            const double d2 = -lq[k] / d;  // gradient of d in the second slot
            div_w[k] += d * d2;
            m[k] += d * (d1 + d2);
        }
    }
    const double deg = static_cast<double>(g.degree(x));
    Vec3 r;
    for (int k = 0; k < 3; ++k) r[k] = (-div_w[k] + 0.5 * m[k]) / deg;
    const double normal = dot3(r, p);
    for (int k = 0; k < 3; ++k) r[k] -= normal * p[k];
    return r;
}

std::string to_string(FlowStatus status) {
    return status == FlowStatus::converged ? "converged" : "step_cap";
}

namespace {

double max_variation(const SphereMap& u, const SubgraphWindow& w, std::vector<Vec3>* out = nullptr) {
    double worst = 0.0;
    if (out) out->clear();
    for (Vertex x : w.interior()) {
        const Vec3 v = first_variation(u, w, x);
        worst = std::max(worst, norm3(v));
        if (out) out->push_back(v);
    }
    return worst;
}

}  // namespace

HarmonicFlowResult harmonic_heat_flow(const SphereMap& u0, const SubgraphWindow& w, double tau,
                                      std::size_t max_steps, double tol) {
    if (!(tau > 0.0) || !std::isfinite(tau)) throw ValidationError("invalid_tau", "tau must be > 0");
    if (!(tol > 0.0)) throw ValidationError("invalid_tolerance", "tolerance must be > 0");
    const Graph& g = w.host();
    for (Vertex x : w.closure()) u0.at(x);

    double max_dist = 0.0;
    std::size_t d_max = 0;
    for (Vertex x : w.interior()) {
        d_max = std::max(d_max, g.degree(x));
        for (Vertex y : g.neighbors(x)) max_dist = std::max(max_dist, sphere_distance(u0.at(x), u0.at(y)));
    }
    if (max_dist > 0.0) {
        tau = std::min(tau, static_cast<double>(d_max) * std::numbers::pi / (2.0 * max_dist));
    }

    HarmonicFlowResult r;
    r.u = u0;
    r.initial_tau = tau;
    std::vector<Vec3> variation;
    double energy = map_energy(r.u, w);
    r.final_variation = max_variation(r.u, w, &variation);
    r.history.push_back({0, tau, energy, r.final_variation});
    while (r.final_variation > tol) {
        if (r.steps >= max_steps) {
            r.status = FlowStatus::step_cap;
            return r;
        }
        SphereMap next = r.u;
        for (std::size_t i = 0; i < w.interior().size(); ++i) {
            const Vertex x = w.interior()[i];
            const Vec3& v = variation[i];
            next.set(x, sphere_exp(r.u.at(x), {-tau * v[0], -tau * v[1], -tau * v[2]}));
        }
        const double next_energy = map_energy(next, w);
        if (next_energy > energy + energy_roundoff(energy)) {
            tau *= 0.5;
            ++r.rejected;
            if (tau < 1e-300) throw NumericalError("step_underflow", "flow step size underflowed");
            continue;
        }
        r.u = std::move(next);
        energy = next_energy;
        ++r.steps;
        r.final_variation = max_variation(r.u, w, &variation);
        r.history.push_back({r.steps, tau, energy, r.final_variation});
    }
    r.status = FlowStatus::converged;
    return r;
}

DirichletMinimizer dirichlet_minimize(const SphereMap& boundary, const SubgraphWindow& w, double tol, double tau,
                                      std::size_t max_steps) {
    const Graph& g = w.host();
    SphereMap seed(g);
    for (Vertex z : w.boundary()) seed.set(z, boundary.at(z));
    for (int sweep = 0; sweep < 10; ++sweep) {
        for (Vertex x : w.interior()) {
            Vec3 sum{0.0, 0.0, 0.0};
            for (Vertex y : g.neighbors(x)) {
                if (!seed.defined(y)) continue;
                const Vec3& c = seed.at(y).coords();
                for (int k = 0; k < 3; ++k) sum[k] += c[k];
            }
            if (norm3(sum) > 1e-12) seed.set(x, SpherePoint(sum));
        }
    }
    for (Vertex x : w.interior()) {
        if (!seed.defined(x)) seed.set(x, SpherePoint(0.0, 0.0, 1.0));
    }

    DirichletMinimizer out;
    out.seed = seed;
    out.seed_energy = map_energy(seed, w);
    out.flow = harmonic_heat_flow(seed, w, tau, max_steps, tol);
    if (out.flow.status != FlowStatus::converged) {
        throw NumericalError("no_convergence", "harmonic flow hit the step cap of " + std::to_string(max_steps) +
                                                   " before reaching the tolerance");
    }
    out.u = out.flow.u;
    out.energy = map_energy(out.u, w);
    if (out.energy > out.seed_energy) {
        throw NumericalError("energy_increase", "minimizer energy exceeds the seed energy");
    }
    return out;
}

}  // namespace graphcalc
