// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace graphcalc::detail {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;
};

/// Comma-separated, whitespace-trimmed, blank lines and '#' comments skipped.
/// Requires the header to equal `expected` (case-insensitive) and every row to
/// have the same arity.
CsvTable parse_csv(std::string_view text, const std::vector<std::string>& expected_header);

double parse_real(const std::string& field, std::size_t line);

std::string_view trim(std::string_view s);

}  // namespace graphcalc::detail
