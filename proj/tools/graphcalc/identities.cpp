// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/identities.hpp"

#include <algorithm>
#include <cmath>

#include "graphcalc/random.hpp"
#include "graphcalc/vector_field.hpp"
#include "graphcalc/window.hpp"

namespace graphcalc::cli {

double IdentityReport::max_residual() const {
    double worst = 0.0;
    for (const auto& c : checks) worst = std::max(worst, c.max_residual);
    return worst;
}

namespace {

VertexFunction random_function(const Graph& g, Rng& rng) {
    std::vector<double> values(g.vertex_count());
    for (double& v : values) v = rng.uniform(-10.0, 10.0);
    return VertexFunction::on_all(g, std::move(values));
}

VectorField random_field(const Graph& g, Rng& rng, bool antisymmetric) {
    VectorField w = VectorField::zero(g, antisymmetric);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (Vertex y : g.neighbors(x)) {
            if (antisymmetric) {
                if (y < x) continue;
                const double v = rng.uniform(-10.0, 10.0);
                w.set(x, y, v);
                w.set(y, x, -v);
            } else {
                w.set(x, y, rng.uniform(-10.0, 10.0));
            }
        }
    }
    return w;
}

// Connected interior grown from a random seed vertex to a random size.
VertexSet random_connected_subset(const Graph& g, Rng& rng) {
    const std::size_t n = g.vertex_count();
    const auto target = static_cast<std::size_t>(1 + rng.below(n));
    std::vector<bool> in(n, false);
    VertexSet set{static_cast<Vertex>(rng.below(n))};
    in[set[0]] = true;
    while (set.size() < target) {
        VertexSet frontier;
        for (Vertex x : set) {
            for (Vertex y : g.neighbors(x)) {
                if (!in[y]) frontier.push_back(y);
            }
        }
        std::sort(frontier.begin(), frontier.end());
        frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
        if (frontier.empty()) break;
        const Vertex next = frontier[rng.below(frontier.size())];
        in[next] = true;
        set.push_back(next);
    }
    std::sort(set.begin(), set.end());
    return set;
}

void record(IdentityCheck& check, double residual) {
    ++check.instances;
    check.max_residual = std::max(check.max_residual, std::abs(residual));
}

}  // namespace

IdentityReport run_identities(const Graph& g, std::uint64_t seed, std::size_t trials, const CalculusConfig& cfg) {
    IdentityReport r;
    r.seed = seed;
    r.trials = trials;
    r.checks = {{"divergence_theorem"}, {"green_symmetric"}, {"green_vectorfield"},
                {"gradient_product_rule"}, {"divergence_product_rule"}, {"laplacian_product_rule"}};
    if (g.vertex_count() == 0) return r;
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const VertexSet subset = random_connected_subset(g, rng);
        const SubgraphWindow w = build_window(g, subset);
        const VertexFunction f = random_function(g, rng);
        const VertexFunction h = random_function(g, rng);
        const VectorField anti = random_field(g, rng, true);
        const VectorField general = random_field(g, rng, false);

        record(r.checks[0], divergence_theorem_residual(anti, subset));

        const auto green = green_symmetric_report(f, h, w, cfg);
        record(r.checks[1], green.residual);
        r.max_stated_form_residual = std::max(r.max_stated_form_residual, std::abs(green.stated_form_residual));

        record(r.checks[2], green_vectorfield_report(general, f, w).residual);

        const VectorField fw = pointwise_product(f, general);
        std::vector<double> product_values(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v) product_values[v] = f.at(v) * h.at(v);
        const VertexFunction prod = VertexFunction::on_all(g, std::move(product_values));
        for (Vertex x : subset) {
            const auto nb = g.neighbors(x);
            for (Vertex y : nb) {
                const double lhs = f.at(y) * h.at(y) - f.at(x) * h.at(x);
                const double df = edge_difference(f, x, y);
                const double dh = edge_difference(h, x, y);
                record(r.checks[3], lhs - (df * dh + f.at(x) * dh + h.at(x) * df));
            }
            if (nb.empty()) continue;
            record(r.checks[4],
                   divergence(fw, x) - (f.at(x) * divergence(general, x) + 0.5 * dot_gradient(general, f, x)));

            double cross = 0.0;
            for (Vertex y : nb) cross += edge_difference(f, x, y) * edge_difference(h, x, y);
            cross *= cfg.scale() / static_cast<double>(nb.size());
            record(r.checks[5], laplacian(prod, x, cfg) -
                                    (f.at(x) * laplacian(h, x, cfg) + h.at(x) * laplacian(f, x, cfg) + cross));
        }

        // Maximum principle: every other trial plants a strict local minimum.
        const Vertex x = static_cast<Vertex>(rng.below(g.vertex_count()));
        VertexFunction m = random_function(g, rng);
        if (t % 2 == 0 && g.degree(x) > 0) {
            double low = m.at(g.neighbors(x)[0]);
            for (Vertex y : g.neighbors(x)) low = std::min(low, m.at(y));
            m.set(x, low - rng.uniform(0.0, 1.0) - 1e-3);
        }
        const auto mp = maximum_principle_check(m, x, cfg);
        if (mp.is_local_min) ++r.local_minima_tested;
        if (!mp.consistent()) ++r.maximum_principle_violations;
    }
    return r;
}

Json to_json(const IdentityReport& report) {
    Json checks = Json::object();
    for (const auto& c : report.checks) {
        checks[c.name] = Json{{"instances", c.instances}, {"max_residual", c.max_residual}};
    }
    return Json{{"seed", report.seed},
                {"trials", report.trials},
                {"max_residual", report.max_residual()},
                {"checks", checks},
                {"maximum_principle",
                 Json{{"local_minima_tested", report.local_minima_tested},
                      {"violations", report.maximum_principle_violations}}},
                {"reported_only", Json{{"max_stated_form_green_residual", report.max_stated_form_residual}}}};
}

}  // namespace graphcalc::cli
