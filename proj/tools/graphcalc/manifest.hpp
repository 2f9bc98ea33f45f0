// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphcalc/json_writer.hpp"

namespace graphcalc::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

/// What produced an output: arguments (thread count excluded), input digests,
/// configuration and tool version.
class RunManifest {
public:
    explicit RunManifest(std::vector<std::string> command);

    /// Reads a file and records its digest. Throws ValidationError("missing_file").
    std::string read_input(const std::string& path);

    Json& config() noexcept { return config_; }
    Json to_json() const;

private:
    std::vector<std::string> command_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    Json config_ = Json::object();
};

}  // namespace graphcalc::cli
