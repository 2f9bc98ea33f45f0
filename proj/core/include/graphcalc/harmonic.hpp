// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphcalc/graph.hpp"
#include "graphcalc/window.hpp"

namespace graphcalc {

using Vec3 = std::array<double, 3>;

double dot3(const Vec3& a, const Vec3& b);
Vec3 cross3(const Vec3& a, const Vec3& b);
double norm3(const Vec3& a);

/// Point on the unit two-sphere; normalized on construction.
class SpherePoint {
public:
    SpherePoint() = default;
    /// Throws ValidationError("zero_vector") for a zero or non-finite input.
    SpherePoint(double x, double y, double z);
    explicit SpherePoint(const Vec3& v) : SpherePoint(v[0], v[1], v[2]) {}

    const Vec3& coords() const noexcept { return c_; }
    double operator[](std::size_t i) const { return c_[i]; }

private:
    Vec3 c_{0.0, 0.0, 1.0};
};

/// Geodesic distance atan2(|p x q|, p . q), in [0, pi].
double sphere_distance(const SpherePoint& p, const SpherePoint& q);

/// Tangent vector at p pointing along the geodesic to q with length d(p, q).
/// Throws NumericalError("antipodal") when q = -p.
Vec3 sphere_log(const SpherePoint& p, const SpherePoint& q);

/// cos|v| p + sin|v| v/|v| for tangent v at p.
SpherePoint sphere_exp(const SpherePoint& p, const Vec3& v);

/// Sphere-valued map on a subset of a host graph's vertices.
class SphereMap {
public:
    SphereMap() = default;
    explicit SphereMap(const Graph& g) : host_(&g), values_(g.vertex_count()) {}

    const Graph& host() const noexcept { return *host_; }

    /// Throws ValidationError("out_of_domain").
    const SpherePoint& at(Vertex v) const;
    void set(Vertex v, const SpherePoint& p);
    bool defined(Vertex v) const noexcept { return v < values_.size() && values_[v].has_value(); }
    VertexSet domain() const;

private:
    const Graph* host_ = nullptr;
    std::vector<std::optional<SpherePoint>> values_;
};

/// CSV with header "vertex,x,y,z"; rows are normalized on load.
SphereMap load_sphere_map(const Graph& g, std::string_view csv_text);

/// E_S(u) = sum_{x in closure} (1/2) sum_{y in N(x) n closure} d^2(u(x), u(y)),
/// i.e. every edge inside the closure contributes d^2 once.
double map_energy(const SphereMap& u, const SubgraphWindow& w);

/// tau(x) = -(1/d_x) sum_{y ~ x} log_{u(x)} u(y) for x in S. The gradient of
/// E_S with respect to u(x) is 2 d_x tau(x).
Vec3 first_variation(const SphereMap& u, const SubgraphWindow& w, Vertex x);

/// -div W(x) + M(u)(x)/2 with W(x)_y = d(u(x), u(y)) d_2 d(u(x), u(y)) and
/// M(u)(x) = (1/d_x) sum_y d (d_1 d + d_2 d), the slot derivatives taken as
/// tangent gradients in ambient coordinates, projected onto T_{u(x)}.
/// Equals -(1/d_x) sum_y (1 + cos d)/2 log_{u(x)} u(y).
Vec3 ambient_residual(const SphereMap& u, const SubgraphWindow& w, Vertex x);

enum class FlowStatus { converged, step_cap };

std::string to_string(FlowStatus status);

struct FlowRecord {
    std::size_t step = 0;  ///< accepted step count after this record
    double tau = 0.0;
    double energy = 0.0;
    double max_variation = 0.0;
};

/// Evaluation error allowed when comparing energies: near a critical point the
/// true decrease of a step falls below the roundoff of the energy sum.
double energy_roundoff(double energy);

struct HarmonicFlowResult {
    SphereMap u;
    FlowStatus status = FlowStatus::step_cap;
    std::size_t steps = 0;      ///< accepted steps
    std::size_t rejected = 0;   ///< halvings after an energy increase
    double initial_tau = 0.0;   ///< tau after the stability cap
    double final_variation = 0.0;
    std::vector<FlowRecord> history;  ///< entry 0 is the initial state
};

/// Projected explicit descent u(x) <- exp_{u(x)}(-tau tau(x)) on all of S at
/// once, boundary frozen. tau is capped at d_max * pi / (2 * max adjacent
/// distance) and halved whenever a step would raise the energy by more than
/// energy_roundoff. Stops when max |tau(x)| <= tol or after max_steps
/// accepted steps.
HarmonicFlowResult harmonic_heat_flow(const SphereMap& u0, const SubgraphWindow& w, double tau,
                                      std::size_t max_steps, double tol);

struct DirichletMinimizer {
    SphereMap u;
    SphereMap seed;
    double energy = 0.0;
    double seed_energy = 0.0;
    HarmonicFlowResult flow;
};

/// Seeds S by 10 Gauss-Seidel sweeps of normalized neighbor averaging from the
/// boundary data ((0, 0, 1) where the average is undefined or zero), then runs
/// the flow from initial step tau. Throws NumericalError("no_convergence") when the
/// step cap is hit and ("energy_increase") if E(u) > E(seed).
DirichletMinimizer dirichlet_minimize(const SphereMap& boundary, const SubgraphWindow& w, double tol,
                                      double tau = 0.5, std::size_t max_steps = 100000);

}  // namespace graphcalc
