// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/commands.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include "graphcalc/constants.hpp"
#include "graphcalc/error.hpp"
#include "graphcalc/evolution.hpp"
#include "graphcalc/harmonic.hpp"
#include "graphcalc/identities.hpp"
#include "graphcalc/minimax.hpp"
#include "graphcalc/spectral.hpp"
#include "graphcalc/vector_field.hpp"

namespace graphcalc::cli {
namespace {

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        std::string item = text.substr(start, comma - start);
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first != std::string::npos) out.push_back(item.substr(first, last - first + 1));
        start = comma + 1;
    }
    return out;
}

std::optional<double> parse_number(std::string_view text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

double require_number(std::string_view text, const std::string& what) {
    const auto v = parse_number(text);
    if (!v) throw ValidationError("invalid_argument", what + " must be a finite number, got \"" + std::string(text) + "\"");
    return *v;
}

Graph read_graph(const Options& opt, RunManifest& manifest) { return load_graph(manifest.read_input(opt.positional[0])); }

Json names_of(const Graph& g, std::span<const Vertex> vertices) {
    Json out = Json::array();
    for (Vertex v : vertices) out.push_back(g.name(v));
    return out;
}

Json values_of(const Graph& g, const VertexFunction& f, std::span<const Vertex> vertices) {
    Json out = Json::object();
    for (Vertex v : vertices) out[g.name(v)] = f.at(v);
    return out;
}

std::vector<Vertex> ordered_vertices(const Graph& g, const std::string& list) {
    std::vector<Vertex> out;
    for (const auto& name : split_list(list)) out.push_back(g.index_of(name));
    return out;
}

SubgraphWindow window_for(const Graph& g, const Options& opt) {
    if (!opt.interior) return whole_graph_window(g);
    return build_window(g, resolve_names(g, split_list(*opt.interior)));
}

const std::string& require(const std::optional<std::string>& value, const char* flag) {
    if (!value) throw ValidationError("missing_option", std::string(flag) + " is required");
    return *value;
}

Potential make_potential(const std::string& spec, const Graph& g, RunManifest& manifest) {
    if (spec == "sin") return Potential::sine();
    if (spec.rfind("const:", 0) == 0) return Potential::constant(require_number(spec.substr(6), "const:<v>"));
    if (spec.rfind("linear:", 0) == 0) {
        const auto parts = split_list(spec.substr(7));
        if (parts.size() != 2) throw ValidationError("invalid_argument", "linear profile needs linear:<a>,<b>");
        return Potential::linear(require_number(parts[0], "a"), require_number(parts[1], "b"));
    }
    if (const auto v = parse_number(spec)) return Potential::constant(*v);
    return Potential::on_vertices(load_vertex_function(g, manifest.read_input(spec)));
}

std::optional<VertexFunction> static_potential(const Options& opt, const SubgraphWindow& w, RunManifest& manifest) {
    if (!opt.potential) return std::nullopt;
    const Potential V = make_potential(*opt.potential, w.host(), manifest);
    if (!V.time_independent()) {
        throw ValidationError("invalid_argument", "this command needs a time-independent potential");
    }
    VertexFunction q(w.host(), w.interior());
    for (Vertex x : w.interior()) q.set(x, V(0.0, x));
    manifest.config()["potential"] = V.label();
    return q;
}

BoundaryCondition bc_for(const Options& opt, RunManifest& manifest) {
    const BoundaryCondition bc =
        opt.bc ? parse_boundary_condition(*opt.bc) : (opt.interior ? BoundaryCondition::dirichlet : BoundaryCondition::none);
    manifest.config()["bc"] = to_string(bc);
    return bc;
}

std::string json_output(Json result, const RunManifest& manifest) {
    result["manifest"] = manifest.to_json();
    return dump_json(result) + "\n";
}

std::string manifest_line(const RunManifest& manifest) { return "# manifest: " + dump_json(manifest.to_json(), -1) + "\n"; }

std::string trajectory_csv(const Trajectory& traj, const Graph& g, const RunManifest& manifest) {
    std::string out = manifest_line(manifest);
    out += "time,vertex,value\n";
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const auto& state = traj.states[k];
        for (Vertex v : state.domain()) {
            out += format_real(traj.times[k]) + "," + g.name(v) + "," + format_real(state.at(v)) + "\n";
        }
    }
    return out;
}

Json cut_json(const Graph& g, const CutReport& c) {
    return Json{{"subset", names_of(g, c.subset)},
                {"edge_boundary_size", c.edge_boundary_size},
                {"vertex_boundary_size", c.vertex_boundary_size},
                {"vol_S", c.vol_S},
                {"vol_complement", c.vol_complement},
                {"h_value", c.h_value},
                {"g_value", c.g_value}};
}

// --- subcommands --------------------------------------------------------------------

std::string cmd_graph(const Options& opt, RunManifest& manifest) {
    const Graph g = read_graph(opt, manifest);
    Json degrees = Json::object();
    double total = 0.0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        degrees[g.name(v)] = g.degree(v);
        total += static_cast<double>(g.degree(v));
    }
    Json r{{"vertex_count", g.vertex_count()},
           {"edge_count", g.edge_count()},
           {"connected", is_connected(g)},
           {"volume", total},
           {"vertices", g.names()},
           {"degrees", degrees}};
    if (opt.from || opt.to) {
        const Vertex a = g.index_of(require(opt.from, "--from"));
        const Vertex b = g.index_of(require(opt.to, "--to"));
        const auto d = graph_distance(g, a, b);
        r["distance"] = Json{{"from", g.name(a)}, {"to", g.name(b)}, {"value", d ? Json(*d) : Json(nullptr)}};
    }
    return json_output(r, manifest);
}

std::string cmd_spectrum(const Options& opt, const CalculusConfig& cfg, RunManifest& manifest) {
    const Graph g = read_graph(opt, manifest);
    const SubgraphWindow w = window_for(g, opt);
    const BoundaryCondition bc = bc_for(opt, manifest);
    auto q = static_potential(opt, w, manifest);
    const auto es = eigensystem(OperatorSpec{w, std::move(q), bc, cfg});
    Json r{{"bc", to_string(bc)},
           {"interior", names_of(g, w.interior())},
           {"boundary", names_of(g, w.boundary())},
           {"values", es.values()},
           {"orthonormality_defect", es.orthonormality_defect()},
           {"max_residual", es.max_residual()}};
    if (opt.functions) {
        Json fns = Json::array();
        for (std::size_t j = 0; j < es.size(); ++j) fns.push_back(values_of(g, es.function(j), w.closure()));
        r["functions"] = fns;
    }
    return json_output(r, manifest);
}

std::string cmd_cheeger(const Options& opt, RunManifest& manifest) {
    const Graph g = read_graph(opt, manifest);
    const auto h = cheeger_h(g, opt.threads);
    const auto gc = cheeger_g(g, opt.threads);
    Json r{{"h", h.value},
           {"h_witness", cut_json(g, h.witness)},
           {"g", gc.value},
           {"g_witness", cut_json(g, gc.witness)},
           {"g_at_least_h", gc.value >= h.value}};
    if (opt.subset) {
        const VertexSet s = resolve_names(g, split_list(*opt.subset));
        std::vector<double> indicator(g.vertex_count(), 0.0);
        for (Vertex v : s) indicator[v] = 1.0;
        const auto functional = cheeger_functional(g, VertexFunction::on_all(g, indicator));
        r["subset_cut"] = cut_json(g, cut_report(g, s));
        r["subset_functional"] = functional.value;
    }
    return json_output(r, manifest);
}

std::string cmd_minimax(const Options& opt, RunManifest& manifest) {
    const Graph g = read_graph(opt, manifest);
    const VertexFunction f = load_vertex_function(g, manifest.read_input(opt.positional[1]));
    const Vertex z0 = g.index_of(require(opt.from, "--from"));
    const Vertex z1 = g.index_of(require(opt.to, "--to"));
    const auto m = find_minimax(g, f, z0, z1);
    Json r{{"c", m.c},
           {"z", g.name(m.z)},
           {"path", names_of(g, m.path)},
           {"low_neighbors", names_of(g, m.low_neighbors)},
           {"warnings", m.warnings},
           {"classifier", m.classifier_verdict}};
    return json_output(r, manifest);
}

std::string cmd_heat(const Options& opt, const CalculusConfig& cfg, RunManifest& manifest) {
    const Graph g = read_graph(opt, manifest);
    const VertexFunction f = load_vertex_function(g, manifest.read_input(opt.positional[1]));
    const SubgraphWindow w = window_for(g, opt);
    const BoundaryCondition bc = bc_for(opt, manifest);
    auto q = static_potential(opt, w, manifest);
    manifest.config()["T"] = opt.T;
    manifest.config()["dt"] = *opt.dt;
    const OperatorSpec spec{w, std::move(q), bc, cfg};
    const auto times = uniform_grid(opt.T, *opt.dt);
    const auto traj = spectral_heat_solve(spec, f, times);
    if (!opt.identities) return trajectory_csv(traj, g, manifest);

    const auto rep = heat_identities_report(traj, spec);
    Json r{{"step", rep.step},
           {"max_rate_residual", rep.max_rate_residual},
           {"energy_monotone", rep.energy_monotone},
           {"max_energy_increase", rep.max_energy_increase},
           {"max_energy_identity_residual", rep.max_energy_identity_residual},
           {"max_norm_increase", rep.max_norm_increase},
           {"flow_energy_initial", rep.flow_energy.front()},
           {"flow_energy_final", rep.flow_energy.back()},
           {"reported_only", Json{{"literal_l2_residual", rep.literal_l2_residual},
                                  {"measured_gradient_coefficient", rep.measured_gradient_coefficient},
                                  {"literal_energy_residual", rep.literal_energy_residual}}}};
    return json_output(r, manifest);
}

std::string cmd_transport(const Options& opt, RunManifest& manifest) {
    const Graph g = read_graph(opt, manifest);
    FieldSymmetry mode = FieldSymmetry::as_given;
    if (opt.symmetry == "antisymmetric") {
        mode = FieldSymmetry::antisymmetric;
    } else if (opt.symmetry == "symmetric") {
        mode = FieldSymmetry::symmetric;
    } else if (opt.symmetry != "as_given") {
        throw ValidationError("invalid_argument", "--symmetry must be as_given, symmetric or antisymmetric");
    }
    const VectorField field = load_vector_field(g, manifest.read_input(opt.positional[1]), mode);
    const VertexFunction f0 = load_vertex_function(g, manifest.read_input(opt.positional[2]));
    const Potential profile = opt.profile ? make_potential(*opt.profile, g, manifest) : Potential::constant(1.0);
    manifest.config()["symmetry"] = opt.symmetry;
    manifest.config()["profile"] = profile.label();
    manifest.config()["T"] = opt.T;
    manifest.config()["dt"] = *opt.dt;
    const auto traj = transport_solve(
        g, [&](double t) { return field.combine(profile(t, 0), field, 0.0); }, f0, opt.T, *opt.dt);
    return trajectory_csv(traj, g, manifest);
}

std::string cmd_dmf(const Options& opt, const CalculusConfig& cfg, RunManifest& manifest) {
    const Graph g = read_graph(opt, manifest);
    const VertexFunction phi = load_vertex_function(g, manifest.read_input(opt.positional[1]));
    if (!opt.interior) throw ValidationError("missing_option", "--interior is required");
    const SubgraphWindow w = window_for(g, opt);
    const Potential V = opt.potential ? make_potential(*opt.potential, g, manifest) : Potential::constant(0.0);
    manifest.config()["potential"] = V.label();
    manifest.config()["T"] = opt.T;

    if (opt.study) {
        std::vector<std::size_t> Ns;
        for (const auto& item : split_list(*opt.study)) {
            const double v = require_number(item, "--study entry");
            if (v < 1 || v != std::floor(v)) throw ValidationError("invalid_argument", "--study needs positive integers");
            Ns.push_back(static_cast<std::size_t>(v));
        }
        manifest.config()["study"] = Ns;
        const auto rep = dmf_convergence_study(phi, V, opt.T, Ns, w, cfg);
        Json r{{"reference", rep.self_convergence ? "self" : "spectral"},
               {"Ns", rep.Ns},
               {"steps", rep.steps},
               {"errors", rep.errors},
               {"endpoint_errors", rep.endpoint_errors},
               {"order", rep.order},
               {"endpoint_order", rep.endpoint_order}};
        return json_output(r, manifest);
    }

    if (!opt.N) throw ValidationError("missing_option", "--N is required");
    manifest.config()["N"] = *opt.N;
    const auto run = dmf_run(phi, V, opt.T, *opt.N, w, cfg);
    Json steps = Json::array();
    for (std::size_t n = 0; n < run.steps.size(); ++n) {
        steps.push_back(Json{{"n", n}, {"t", run.h * static_cast<double>(n)},
                             {"values", values_of(g, run.steps[n], w.closure())}});
    }
    Json ledger = Json::array();
    for (const auto& e : run.ledger) {
        ledger.push_back(Json{{"n", e.n},
                              {"t", e.t},
                              {"lambda_max", e.lambda_max},
                              {"functional_before", e.functional_before},
                              {"functional_after", e.functional_after},
                              {"j_before", e.j_before},
                              {"j_after", e.j_after},
                              {"kinetic", e.kinetic},
                              {"correction", e.correction},
                              {"el_residual", e.el_residual}});
    }
    Json r{{"h", run.h},
           {"T", run.T},
           {"N", run.ledger.size()},
           {"steps", steps},
           {"ledger", ledger},
           {"a_priori", Json{{"lhs", run.a_priori_lhs}, {"rhs", run.a_priori_rhs}, {"holds", run.a_priori_holds}}},
           {"warnings", run.warnings}};
    return json_output(r, manifest);
}

std::string cmd_harmonic(const Options& opt, RunManifest& manifest) {
    const Graph g = read_graph(opt, manifest);
    if (!opt.interior) throw ValidationError("missing_option", "--interior is required");
    const SubgraphWindow w = window_for(g, opt);
    const SphereMap boundary = load_sphere_map(g, manifest.read_input(*opt.boundary));
    manifest.config()["tol"] = opt.tol;
    manifest.config()["tau"] = opt.tau;
    manifest.config()["max_steps"] = opt.max_steps;
    const auto m = dirichlet_minimize(boundary, w, opt.tol, opt.tau, opt.max_steps);

    std::string csv = manifest_line(manifest);
    csv += "vertex,x,y,z\n";
    for (Vertex v : w.closure()) {
        const auto& p = m.u.at(v);
        csv += g.name(v) + "," + format_real(p[0]) + "," + format_real(p[1]) + "," + format_real(p[2]) + "\n";
    }
    if (opt.ledger) {
        Json history = Json::array();
        for (const auto& rec : m.flow.history) {
            history.push_back(Json{{"step", rec.step}, {"tau", rec.tau}, {"energy", rec.energy},
                                   {"max_variation", rec.max_variation}});
        }
        Json ledger{{"status", to_string(m.flow.status)},
                    {"steps", m.flow.steps},
                    {"rejected", m.flow.rejected},
                    {"initial_tau", m.flow.initial_tau},
                    {"seed_energy", m.seed_energy},
                    {"energy", m.energy},
                    {"final_variation", m.flow.final_variation},
                    {"history", history}};
        std::ofstream file(*opt.ledger, std::ios::binary);
        if (!file) throw ValidationError("output_error", "cannot write \"" + *opt.ledger + "\"");
        file << json_output(ledger, manifest);
    }
    return csv;
}

std::string cmd_identities(const Options& opt, const CalculusConfig& cfg, RunManifest& manifest) {
    const Graph g = read_graph(opt, manifest);
    manifest.config()["seed"] = opt.seed;
    manifest.config()["trials"] = opt.trials;
    return json_output(to_json(run_identities(g, opt.seed, opt.trials, cfg)), manifest);
}

std::string cmd_monge(const Options& opt, RunManifest& manifest) {
    const Graph g = read_graph(opt, manifest);
    const auto a = ordered_vertices(g, require(opt.from, "--from"));
    const auto b = ordered_vertices(g, require(opt.to, "--to"));
    const auto m = monge_cost(g, a, b);
    Json pairs = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) pairs.push_back(Json::array({g.name(a[i]), g.name(b[m.assignment[i]])}));
    return json_output(Json{{"cost", m.cost}, {"pairs", pairs}}, manifest);
}

}  // namespace

std::string run_command(const Options& opt, const CalculusConfig& cfg, RunManifest& manifest) {
    manifest.config()["laplacian_scale"] = cfg.scale_label();
    const std::string& c = opt.command;
    if (c == "graph") return cmd_graph(opt, manifest);
    if (c == "spectrum") return cmd_spectrum(opt, cfg, manifest);
    if (c == "cheeger") return cmd_cheeger(opt, manifest);
    if (c == "minimax") return cmd_minimax(opt, manifest);
    if (c == "heat") return cmd_heat(opt, cfg, manifest);
    if (c == "transport") return cmd_transport(opt, manifest);
    if (c == "dmf") return cmd_dmf(opt, cfg, manifest);
    if (c == "harmonic") return cmd_harmonic(opt, manifest);
    if (c == "identities") return cmd_identities(opt, cfg, manifest);
    if (c == "monge") return cmd_monge(opt, manifest);
    throw ValidationError("unknown_subcommand", "unknown subcommand \"" + c + "\"");
}

}  // namespace graphcalc::cli
