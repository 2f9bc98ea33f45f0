// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "graphcalc/error.hpp"
#include "graphcalc/harmonic.hpp"

using namespace graphcalc;

namespace {

constexpr double kPi = std::numbers::pi;

SpherePoint random_point(Rng& rng) { return SpherePoint(rng.normal(), rng.normal(), rng.normal()); }

Vec3 random_tangent(const SpherePoint& p, Rng& rng) {
    Vec3 v{rng.normal(), rng.normal(), rng.normal()};
    const double along = dot3(v, p.coords());
    for (std::size_t i = 0; i < 3; ++i) v[i] -= along * p[i];
    return v;
}

/// Random map on the closure whose values stay in a cap around (0, 0, 1), so no
/// adjacent pair is antipodal.
SphereMap random_cap_map(const SubgraphWindow& w, Rng& rng, double spread) {
    SphereMap u(w.host());
    for (Vertex v : w.closure()) u.set(v, SpherePoint(spread * rng.normal(), spread * rng.normal(), 1.0));
    return u;
}

/// Every accepted step lowers the energy up to its evaluation roundoff.
void expect_descent(const std::vector<FlowRecord>& history) {
    for (std::size_t k = 1; k < history.size(); ++k) {
        EXPECT_LE(history[k].energy, history[k - 1].energy + energy_roundoff(history[k - 1].energy)) << "step " << k;
    }
}

/// Central difference of E along exp_{u(x)}(s v), compared with <grad E, v>.
double fd_directional(const SphereMap& u, const SubgraphWindow& w, Vertex x, const Vec3& v, double s) {
    SphereMap plus = u, minus = u;
    plus.set(x, sphere_exp(u.at(x), Vec3{s * v[0], s * v[1], s * v[2]}));
    minus.set(x, sphere_exp(u.at(x), Vec3{-s * v[0], -s * v[1], -s * v[2]}));
    return (map_energy(plus, w) - map_energy(minus, w)) / (2 * s);
}

Vec3 rotate(const Vec3& p, const Vec3& axis, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    const Vec3 k = axis;
    const Vec3 kxp = cross3(k, p);
    const double kp = dot3(k, p);
    Vec3 out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = p[i] * c + kxp[i] * s + k[i] * kp * (1 - c);
    return out;
}

}  // namespace

TEST(Sphere, DistanceExamples) {
    const SpherePoint e1(1, 0, 0), e2(0, 1, 0), m1(-1, 0, 0);
    EXPECT_EQ(sphere_distance(e1, e1), 0.0);
    EXPECT_NEAR(sphere_distance(e1, e2), kPi / 2, 1e-15);
    EXPECT_NEAR(sphere_distance(e1, m1), kPi, 1e-15);
    const SpherePoint scaled(3, 0, 0);
    EXPECT_EQ(scaled[0], 1.0);
    EXPECT_THROW(SpherePoint(0, 0, 0), ValidationError);
}

TEST(Sphere, LogExpExamples) {
    const SpherePoint e1(1, 0, 0), e2(0, 1, 0);
    const auto zero = sphere_log(e1, e1);
    EXPECT_EQ(norm3(zero), 0.0);
    const auto v = sphere_log(e1, e2);
    EXPECT_NEAR(v[0], 0.0, 1e-15);
    EXPECT_NEAR(v[1], kPi / 2, 1e-15);
    EXPECT_NEAR(v[2], 0.0, 1e-15);
    try {
        sphere_log(e1, SpherePoint(-1, 0, 0));
        FAIL();
    } catch (const NumericalError& e) {
        EXPECT_EQ(e.kind(), "antipodal");
    }
}

TEST(Sphere, RoundTripAndDistance) {
    Rng rng(100);
    for (int t = 0; t < 100; ++t) {
        const auto p = random_point(rng);
        const auto q = random_point(rng);
        const auto v = sphere_log(p, q);
        EXPECT_NEAR(norm3(v), sphere_distance(p, q), 1e-12);
        EXPECT_NEAR(dot3(v, p.coords()), 0.0, 1e-12);
        const auto back = sphere_exp(p, v);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(back[i], q[i], 1e-10);
        EXPECT_NEAR(sphere_distance(p, q), sphere_distance(q, p), 1e-15);
    }
}

TEST(Sphere, GradientOfHalfSquaredDistanceIsMinusLog) {
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        const auto p = random_point(rng);
        const auto q = random_point(rng);
        if (sphere_distance(p, q) > 3.0) continue;
        const auto v = random_tangent(p, rng);
        const double s = 1e-6;
        const auto fwd = sphere_exp(p, Vec3{s * v[0], s * v[1], s * v[2]});
        const auto bwd = sphere_exp(p, Vec3{-s * v[0], -s * v[1], -s * v[2]});
        const double fd = (0.5 * std::pow(sphere_distance(fwd, q), 2) - 0.5 * std::pow(sphere_distance(bwd, q), 2)) / (2 * s);
        const auto log = sphere_log(p, q);
        EXPECT_NEAR(fd, -dot3(log, v), 1e-7 * (1 + norm3(v)));
    }
}

TEST(MapEnergy, Examples) {
    const Graph p3 = fixtures::p3();
    const auto w = build_window(p3, resolve_names(p3, {"b"}));
    SphereMap u(p3);
    u.set(0, SpherePoint(1, 0, 0));
    u.set(2, SpherePoint(0, 1, 0));
    u.set(1, SpherePoint(1, 1, 0));
    EXPECT_NEAR(map_energy(u, w), kPi * kPi / 8, 1e-14);
    SphereMap c(p3);
    for (Vertex v = 0; v < 3; ++v) c.set(v, SpherePoint(0, 0, 1));
    EXPECT_EQ(map_energy(c, w), 0.0);

    const Graph k2 = fixtures::k2();
    SphereMap e(k2);
    e.set(0, SpherePoint(1, 0, 0));
    e.set(1, SpherePoint(0, 0, 1));
    EXPECT_NEAR(map_energy(e, whole_graph_window(k2)), kPi * kPi / 4, 1e-14);
}

TEST(MapEnergy, RotationInvariance) {
    Rng rng(13);
    const Graph g = fixtures::grid(4, 4);
    const auto w = build_window(g, resolve_names(g, {"r1c1", "r1c2", "r2c1", "r2c2"}));
    const auto u = random_cap_map(w, rng, 0.7);
    const double e = map_energy(u, w);
    for (int t = 0; t < 10; ++t) {
        const auto axis = random_point(rng).coords();
        const double angle = rng.uniform(0, 2 * kPi);
        SphereMap r(g);
        for (Vertex v : w.closure()) r.set(v, SpherePoint(rotate(u.at(v).coords(), axis, angle)));
        EXPECT_NEAR(map_energy(r, w), e, 1e-10);
    }
}

TEST(FirstVariation, Examples) {
    const Graph p3 = fixtures::p3();
    const auto w = build_window(p3, resolve_names(p3, {"b"}));
    SphereMap u(p3);
    u.set(0, SpherePoint(1, 0, 0));
    u.set(2, SpherePoint(0, 1, 0));
    u.set(1, SpherePoint(1, 1, 0));
    EXPECT_LE(norm3(first_variation(u, w, 1)), 1e-15);

    SphereMap c(p3);
    for (Vertex v = 0; v < 3; ++v) c.set(v, SpherePoint(0, 1, 1));
    EXPECT_LE(norm3(first_variation(c, w, 1)), 1e-15);

    // u(b) = u(a): the variation points away from u(c).
    u.set(1, SpherePoint(1, 0, 0));
    const auto tau = first_variation(u, w, 1);
    const auto toward_c = sphere_log(u.at(1), u.at(2));
    EXPECT_NEAR(tau[1], -toward_c[1] / 2, 1e-15);
    const double fd = fd_directional(u, w, 1, Vec3{0, 1, 0}, 1e-5);
    EXPECT_NEAR(fd, 2 * 2 * dot3(tau, Vec3{0, 1, 0}), 1e-6);
}

TEST(FirstVariation, MatchesFiniteDifferences) {
    Rng rng(2025);
    for (const auto& nw : fixtures::standard_windows()) {
        const auto u = random_cap_map(nw.window, rng, 0.6);
        for (Vertex x : nw.window.interior()) {
            const auto tau = first_variation(u, nw.window, x);
            for (int k = 0; k < 2; ++k) {
                const auto v = random_tangent(u.at(x), rng);
                const double grad = 2 * static_cast<double>(nw.graph->degree(x)) * dot3(tau, v);
                const double fd = fd_directional(u, nw.window, x, v, 1e-5);
                EXPECT_NEAR(fd, grad, 1e-5 * std::max(1.0, std::abs(grad))) << nw.name;
            }
        }
    }
}

TEST(FirstVariation, AntipodalNeighborRejected) {
    const Graph p3 = fixtures::p3();
    const auto w = build_window(p3, resolve_names(p3, {"b"}));
    SphereMap u(p3);
    u.set(0, SpherePoint(1, 0, 0));
    u.set(1, SpherePoint(-1, 0, 0));
    u.set(2, SpherePoint(0, 1, 0));
    EXPECT_THROW(first_variation(u, w, 1), NumericalError);
}

TEST(AmbientResidual, AgreesAtSymmetricMinimizer) {
    const Graph p3 = fixtures::p3();
    const auto w = build_window(p3, resolve_names(p3, {"b"}));
    SphereMap b(p3);
    b.set(0, SpherePoint(1, 0, 0));
    b.set(2, SpherePoint(0, 1, 0));
    const auto m = dirichlet_minimize(b, w, 1e-12);
    const auto amb = ambient_residual(m.u, w, 1);
    const auto tau = first_variation(m.u, w, 1);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(amb[i], tau[i], 1e-6);
}

TEST(AmbientResidual, ClosedFormWeighting) {
    Rng rng(71);
    for (const auto& nw : fixtures::standard_windows()) {
        const auto u = random_cap_map(nw.window, rng, 0.5);
        for (Vertex x : nw.window.interior()) {
            Vec3 expected{0, 0, 0};
            const double dx = static_cast<double>(nw.graph->degree(x));
            for (Vertex y : nw.graph->neighbors(x)) {
                const auto l = sphere_log(u.at(x), u.at(y));
                const double weight = (1 + std::cos(sphere_distance(u.at(x), u.at(y)))) / 2;
                for (std::size_t i = 0; i < 3; ++i) expected[i] -= weight * l[i] / dx;
            }
            const auto amb = ambient_residual(u, nw.window, x);
            for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(amb[i], expected[i], 1e-12) << nw.name;
        }
    }
}

TEST(HeatFlow, FixedPoint) {
    const Graph g = fixtures::grid(4, 4);
    const auto w = build_window(g, resolve_names(g, {"r1c1", "r1c2", "r2c1", "r2c2"}));
    SphereMap u(g);
    for (Vertex v : w.closure()) u.set(v, SpherePoint(0, 0.6, 0.8));
    const auto r = harmonic_heat_flow(u, w, 0.5, 100, 1e-12);
    EXPECT_EQ(r.status, FlowStatus::converged);
    EXPECT_EQ(r.steps, 0u);
    EXPECT_EQ(r.final_variation, 0.0);
}

TEST(HeatFlow, GeodesicMidpointOnPath) {
    const Graph p3 = fixtures::p3();
    const auto w = build_window(p3, resolve_names(p3, {"b"}));
    SphereMap u(p3);
    u.set(0, SpherePoint(1, 0, 0));
    u.set(2, SpherePoint(0, 1, 0));
    u.set(1, SpherePoint(0, 0, 1));
    const auto r = harmonic_heat_flow(u, w, 0.5, 10000, 1e-12);
    EXPECT_EQ(r.status, FlowStatus::converged);
    const double s = 1 / std::sqrt(2.0);
    EXPECT_NEAR(r.u.at(1)[0], s, 1e-8);
    EXPECT_NEAR(r.u.at(1)[1], s, 1e-8);
    EXPECT_NEAR(r.u.at(1)[2], 0.0, 1e-8);
    EXPECT_EQ(r.u.at(0)[0], 1.0);
    expect_descent(r.history);
}

TEST(HeatFlow, GridCapDescends) {
    const Graph g = fixtures::grid(5, 5);
    std::vector<std::string> interior;
    for (int r = 1; r <= 3; ++r) {
        for (int c = 1; c <= 3; ++c) interior.push_back("r" + std::to_string(r) + "c" + std::to_string(c));
    }
    const auto w = build_window(g, resolve_names(g, interior));
    Rng rng(44);
    SphereMap u = random_cap_map(w, rng, 0.3);
    const auto r = harmonic_heat_flow(u, w, 0.5, 100000, 1e-9);
    EXPECT_EQ(r.status, FlowStatus::converged);
    EXPECT_LE(r.history.back().energy, r.history.front().energy);
    expect_descent(r.history);
    for (Vertex b : w.boundary()) EXPECT_EQ(r.u.at(b).coords(), u.at(b).coords());
}

TEST(HeatFlow, StepCapAndErrors) {
    const Graph p3 = fixtures::p3();
    const auto w = build_window(p3, resolve_names(p3, {"b"}));
    SphereMap u(p3);
    u.set(0, SpherePoint(1, 0, 0));
    u.set(2, SpherePoint(0, 1, 0));
    u.set(1, SpherePoint(0, 0, 1));
    const auto capped = harmonic_heat_flow(u, w, 0.01, 3, 1e-14);
    EXPECT_EQ(capped.status, FlowStatus::step_cap);
    EXPECT_EQ(capped.steps, 3u);
    EXPECT_EQ(to_string(FlowStatus::step_cap), "step_cap");
    try {
        harmonic_heat_flow(u, w, 0.0, 3, 1e-8);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.kind(), "invalid_tau");
    }
    const Graph grid = fixtures::grid(5, 5);
    const auto inner = build_window(grid, resolve_names(grid, {"r1c1", "r1c2", "r1c3", "r2c1", "r2c2", "r2c3",
                                                              "r3c1", "r3c2", "r3c3"}));
    Rng rng(3);
    try {
        dirichlet_minimize(random_cap_map(inner, rng, 0.5), inner, 1e-14, 0.01, 3);
        FAIL();
    } catch (const NumericalError& e) {
        EXPECT_EQ(e.kind(), "no_convergence");
    }
}

TEST(DirichletMinimize, ConstantBoundary) {
    const Graph g = fixtures::grid(4, 4);
    const auto w = build_window(g, resolve_names(g, {"r1c1", "r1c2", "r2c1", "r2c2"}));
    SphereMap b(g);
    for (Vertex v : w.boundary()) b.set(v, SpherePoint(1, 2, 2));
    const auto m = dirichlet_minimize(b, w, 1e-10);
    EXPECT_NEAR(m.energy, 0.0, 1e-20);
    for (Vertex v : w.interior()) {
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(m.u.at(v)[i], b.at(w.boundary()[0])[i], 1e-12);
    }
}

TEST(DirichletMinimize, PathMidpoint) {
    const Graph p3 = fixtures::p3();
    const auto w = build_window(p3, resolve_names(p3, {"b"}));
    SphereMap b(p3);
    b.set(0, SpherePoint(1, 0, 0));
    b.set(2, SpherePoint(0, 1, 0));
    const auto m = dirichlet_minimize(b, w, 1e-12);
    const double s = 1 / std::sqrt(2.0);
    EXPECT_NEAR(m.u.at(1)[0], s, 1e-8);
    EXPECT_NEAR(m.u.at(1)[1], s, 1e-8);
    EXPECT_LE(m.energy, m.seed_energy);
}

TEST(DirichletMinimize, HemisphereIsPreserved) {
    Rng rng(9);
    const Graph g = fixtures::grid(5, 5);
    std::vector<std::string> interior;
    for (int r = 1; r <= 3; ++r) {
        for (int c = 1; c <= 3; ++c) interior.push_back("r" + std::to_string(r) + "c" + std::to_string(c));
    }
    const auto w = build_window(g, resolve_names(g, interior));
    SphereMap b(g);
    for (Vertex v : w.boundary()) b.set(v, SpherePoint(rng.normal(), rng.normal(), 0.3 + std::abs(rng.normal())));
    const auto m = dirichlet_minimize(b, w, 1e-9);
    for (Vertex v : w.interior()) {
        EXPECT_GT(m.u.at(v)[2], 0.0);
        EXPECT_LE(norm3(first_variation(m.u, w, v)), 1e-9);
    }
    EXPECT_LE(m.energy, m.seed_energy);
    expect_descent(m.flow.history);
}

TEST(SphereMapLoader, NormalizesRows) {
    const Graph p3 = fixtures::p3();
    const auto u = load_sphere_map(p3, "vertex,x,y,z\na,2,0,0\nc,0,0,-5\n");
    EXPECT_EQ(u.at(0)[0], 1.0);
    EXPECT_EQ(u.at(2)[2], -1.0);
    EXPECT_FALSE(u.defined(1));
    EXPECT_THROW(u.at(1), ValidationError);
    EXPECT_THROW(load_sphere_map(p3, "vertex,x,y,z\na,0,0,0\n"), ValidationError);
}
