// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace graphcalc::cli {

using Json = nlohmann::ordered_json;

/// Serializes with insertion-ordered keys and every float printed as %.17g.
/// Non-finite floats become null. indent < 0 gives a single line.
std::string dump_json(const Json& value, int indent = 2);

}  // namespace graphcalc::cli
