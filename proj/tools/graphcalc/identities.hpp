// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "graphcalc/calculus.hpp"
#include "graphcalc/graph.hpp"
#include "graphcalc/json_writer.hpp"

namespace graphcalc::cli {

struct IdentityCheck {
    std::string name;
    std::size_t instances = 0;
    double max_residual = 0.0;
};

struct IdentityReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<IdentityCheck> checks;  ///< divergence, Green (both), product rules
    double max_stated_form_residual = 0.0;
    std::size_t local_minima_tested = 0;
    std::size_t maximum_principle_violations = 0;

    double max_residual() const;
};

/// Seeded batch of calculus identities on random windows, functions with
/// values in [-10, 10] and vector fields.
IdentityReport run_identities(const Graph& g, std::uint64_t seed, std::size_t trials, const CalculusConfig& cfg);

Json to_json(const IdentityReport& report);

}  // namespace graphcalc::cli
