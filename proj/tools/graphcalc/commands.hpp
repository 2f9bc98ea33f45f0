// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphcalc/calculus.hpp"
#include "graphcalc/manifest.hpp"

namespace graphcalc::cli {

/// Union of every subcommand's flags.
struct Options {
    std::string command;
    std::array<std::string, 3> positional;
    std::string out;
    std::optional<std::string> scale;
    unsigned threads = 1;

    std::optional<std::string> interior;
    std::optional<std::string> bc;
    std::optional<std::string> potential;
    std::optional<std::string> from;
    std::optional<std::string> to;
    std::optional<std::string> subset;
    bool functions = false;

    double T = 1.0;
    std::optional<double> dt;
    std::optional<std::size_t> N;
    bool identities = false;
    std::string symmetry = "antisymmetric";
    std::optional<std::string> profile;
    std::optional<std::string> study;

    std::optional<std::string> boundary;
    double tol = 1e-8;
    double tau = 0.5;
    std::size_t max_steps = 100000;
    std::optional<std::string> ledger;

    std::uint64_t seed = 0;
    std::size_t trials = 100;
};

/// Output text of a subcommand; `manifest` collects inputs and config.
std::string run_command(const Options& opt, const CalculusConfig& cfg, RunManifest& manifest);

}  // namespace graphcalc::cli
