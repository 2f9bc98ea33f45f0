// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "graphcalc/commands.hpp"
#include "graphcalc/error.hpp"
#include "graphcalc/json_writer.hpp"

namespace graphcalc::cli {
namespace {

struct Subcommand {
    const char* name;
    const char* help;
    std::vector<const char*> positional;
};

const std::vector<Subcommand>& subcommands() {
    static const std::vector<Subcommand> list = {
        {"graph", "graph summary and optional distance", {"graph"}},
        {"spectrum", "eigenvalues of -scale*Laplacian + Q on a window", {"graph"}},
        {"cheeger", "exact Cheeger constants h and g", {"graph"}},
        {"minimax", "bottleneck level and mini-max point between two minima", {"graph", "function"}},
        {"heat", "spectral heat flow trajectory or identity report", {"graph", "function"}},
        {"transport", "RK4 transport trajectory f_t = W . grad f", {"graph", "field", "function"}},
        {"dmf", "discrete Morse flow run or convergence study", {"graph", "function"}},
        {"harmonic", "Dirichlet minimizing harmonic map into the unit sphere", {"graph"}},
        {"identities", "seeded batch of calculus identity checks", {"graph"}},
        {"monge", "exact optimal matching cost under the graph metric", {"graph"}},
    };
    return list;
}

void add_options(CLI::App& sub, const Subcommand& spec, Options& opt) {
    for (std::size_t i = 0; i < spec.positional.size(); ++i) {
        sub.add_option(spec.positional[i], opt.positional[i], std::string(spec.positional[i]) + " file")->required();
    }
    sub.add_option("--out", opt.out, "output file (default: standard output)");
    sub.add_option("--scale", opt.scale, "Laplacian scale: 1 or 2/3");
    sub.add_option("--threads", opt.threads, "worker threads");

    const std::string name = spec.name;
    if (name == "graph" || name == "minimax" || name == "monge") {
        sub.add_option("--from", opt.from, "source vertex (list for monge)");
        sub.add_option("--to", opt.to, "target vertex (list for monge)");
    }
    if (name == "spectrum" || name == "heat" || name == "dmf" || name == "harmonic") {
        sub.add_option("--interior", opt.interior, "comma-separated interior vertex ids");
    }
    if (name == "spectrum" || name == "heat") {
        sub.add_option("--bc", opt.bc, "dirichlet, neumann or none");
    }
    if (name == "spectrum" || name == "heat" || name == "dmf") {
        sub.add_option("--potential", opt.potential, "number, const:<v>, linear:<a>,<b>, sin, or vertex CSV");
    }
    if (name == "spectrum") sub.add_flag("--functions", opt.functions, "include eigenfunctions");
    if (name == "cheeger") sub.add_option("--subset", opt.subset, "also report this cut");
    if (name == "heat" || name == "transport" || name == "dmf") sub.add_option("--T", opt.T, "final time");
    if (name == "heat" || name == "transport") sub.add_option("--dt", opt.dt, "time step")->required();
    if (name == "heat") sub.add_flag("--identities", opt.identities, "emit the identity report instead");
    if (name == "transport") {
        sub.add_option("--symmetry", opt.symmetry, "as_given, symmetric or antisymmetric");
        sub.add_option("--profile", opt.profile, "time modulation: const:<v>, linear:<a>,<b> or sin");
    }
    if (name == "dmf") {
        sub.add_option("--N", opt.N, "number of steps");
        sub.add_option("--study", opt.study, "comma-separated N values for a convergence study");
    }
    if (name == "harmonic") {
        sub.add_option("--boundary", opt.boundary, "boundary map CSV vertex,x,y,z")->required();
        sub.add_option("--tol", opt.tol, "stationarity tolerance");
        sub.add_option("--tau", opt.tau, "initial flow step");
        sub.add_option("--max-steps", opt.max_steps, "accepted step cap");
        sub.add_option("--ledger", opt.ledger, "energy ledger JSON output file");
    }
    if (name == "identities") {
        sub.add_option("--seed", opt.seed, "random seed");
        sub.add_option("--trials", opt.trials, "random instances");
    }
}

std::vector<std::string> without_threads(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--threads") {
            ++i;
            continue;
        }
        if (args[i].rfind("--threads=", 0) == 0) continue;
        out.push_back(args[i]);
    }
    return out;
}

int report_error(std::ostream& err, const char* type, const std::string& kind, const std::string& message,
                 int status) {
    err << dump_json(Json{{"error", Json{{"type", type}, {"kind", kind}, {"message", message}}}}) << '\n';
    return status;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"calculus, spectra and flows on finite graphs", "graphcalc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));
    Options opt;
    std::vector<CLI::App*> subs;
    for (const auto& spec : subcommands()) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        add_options(*sub, spec, opt);
        subs.push_back(sub);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        return report_error(err, "validation", "usage", e.what(), 1);
    }
    for (CLI::App* sub : subs) {
        if (sub->parsed()) opt.command = sub->get_name();
    }

    try {
        CalculusConfig cfg;
        if (opt.scale) {
            cfg.laplacian_scale = parse_laplacian_scale(*opt.scale);
        } else if (const char* env = std::getenv("GRAPHCALC_SCALE"); env && *env) {
            cfg.laplacian_scale = parse_laplacian_scale(env);
        }
        if (opt.threads == 0) throw ValidationError("invalid_threads", "--threads must be >= 1");
        RunManifest manifest(without_threads(args));
        const std::string text = run_command(opt, cfg, manifest);
        if (opt.out.empty()) {
            out << text;
        } else {
            std::ofstream file(opt.out, std::ios::binary);
            if (!file) throw ValidationError("output_error", "cannot write \"" + opt.out + "\"");
            file << text;
        }
        return 0;
    } catch (const ValidationError& e) {
        return report_error(err, "validation", e.kind(), e.what(), 1);
    } catch (const NumericalError& e) {
        return report_error(err, "numerical", e.kind(), e.what(), 2);
    }
}

}  // namespace graphcalc::cli
