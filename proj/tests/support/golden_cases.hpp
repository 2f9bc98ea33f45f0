// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graphcalc/cli.hpp"

// CLI invocations whose outputs are pinned under tests/golden. Arguments are
// relative to tests/fixtures so that the recorded manifests are portable.
namespace golden {

struct Case {
    std::string name;  ///< golden file name
    std::vector<std::string> args;
};

/// Test-name printer for parameterized suites.
inline void PrintTo(const Case& c, std::ostream* os) { *os << c.name; }

inline const std::vector<Case>& cases() {
    static const std::vector<Case> list = {
        {"graph_p5.json", {"graph", "p5.json", "--from", "a", "--to", "e"}},
        {"spectrum_c4.json", {"spectrum", "c4.json", "--bc", "none"}},
        {"spectrum_k4.json", {"spectrum", "k4.json", "--bc", "none", "--functions"}},
        {"spectrum_p5_dirichlet.json", {"spectrum", "p5.json", "--interior", "b,c,d", "--functions"}},
        {"spectrum_p5_neumann.json", {"spectrum", "p5.json", "--interior", "b,c,d", "--bc", "neumann", "--scale", "2/3"}},
        {"spectrum_octahedron.json", {"spectrum", "octahedron.json", "--bc", "none"}},
        {"spectrum_grid4.json", {"spectrum", "grid4.json", "--interior", "r1c1,r1c2,r2c1,r2c2", "--potential", "0.5"}},
        {"cheeger_c4.json", {"cheeger", "c4.json", "--subset", "1,3"}},
        {"cheeger_k4.json", {"cheeger", "k4.json"}},
        {"cheeger_star.json", {"cheeger", "star.json"}},
        {"cheeger_grid4.json", {"cheeger", "grid4.json"}},
        {"cheeger_octahedron.json", {"cheeger", "octahedron.json"}},
        {"minimax_octahedron.json", {"minimax", "octahedron.json", "octahedron_f.csv", "--from", "e1", "--to=-e1"}},
        {"minimax_p5.json", {"minimax", "p5.json", "p5_f.csv", "--from", "a", "--to", "e"}},
        {"heat_p3.csv", {"heat", "p3.json", "p3_phi.csv", "--interior", "b", "--T", "1", "--dt", "0.125"}},
        {"heat_c4.csv", {"heat", "c4.json", "c4_f.csv", "--T", "0.5", "--dt", "0.1"}},
        {"heat_identities_p5.json",
         {"heat", "p5.json", "p5_phi.csv", "--interior", "b,c,d", "--T", "0.5", "--dt", "1e-3", "--identities"}},
        {"transport_k2.csv", {"transport", "k2.json", "k2_field.csv", "k2_f0.csv", "--T", "1", "--dt", "0.1"}},
        {"transport_k2_sin.csv",
         {"transport", "k2.json", "k2_field.csv", "k2_f0.csv", "--T", "1", "--dt", "0.1", "--profile", "sin"}},
        {"dmf_p3.json", {"dmf", "p3.json", "p3_phi.csv", "--interior", "b", "--N", "4"}},
        {"dmf_p5_linear.json", {"dmf", "p5.json", "p5_phi.csv", "--interior", "b,c,d", "--N", "4", "--potential", "linear:0,1"}},
        {"dmf_p3_study.json", {"dmf", "p3.json", "p3_phi.csv", "--interior", "b", "--study", "4,8,16,32,64"}},
        {"harmonic_p3.csv", {"harmonic", "p3.json", "--interior", "b", "--boundary", "p3_boundary.csv", "--tol", "1e-10"}},
        {"identities_c4.json", {"identities", "c4.json", "--seed", "7", "--trials", "200"}},
        {"identities_k4.json", {"identities", "k4.json", "--seed", "7", "--trials", "200"}},
        {"identities_grid4.json", {"identities", "grid4.json", "--seed", "3", "--trials", "50", "--scale", "2/3"}},
        {"monge_c4.json", {"monge", "c4.json", "--from", "1,2", "--to", "3,4"}},
        {"monge_grid4.json", {"monge", "grid4.json", "--from", "r0c0,r0c1,r0c2", "--to", "r3c3,r3c2,r2c3"}},
    };
    return list;
}

struct Output {
    int status = 0;
    std::string out;
    std::string err;
};

/// Runs a case from the fixture directory with GRAPHCALC_SCALE cleared.
inline Output run(const Case& c, const std::vector<std::string>& extra = {}) {
    unsetenv("GRAPHCALC_SCALE");
    const auto previous = std::filesystem::current_path();
    std::filesystem::current_path(GRAPHCALC_FIXTURE_DIR);
    std::vector<std::string> args = c.args;
    args.insert(args.end(), extra.begin(), extra.end());
    std::ostringstream out, err;
    Output o;
    o.status = graphcalc::cli::dispatch(args, out, err);
    std::filesystem::current_path(previous);
    o.out = out.str();
    o.err = err.str();
    return o;
}

inline std::string path(const Case& c) { return std::string(GRAPHCALC_GOLDEN_DIR) + "/" + c.name; }

/// Reads the golden file into `text`; false when it does not exist.
inline bool read(const Case& c, std::string& text) {
    std::ifstream in(path(c), std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    return true;
}

}  // namespace golden
