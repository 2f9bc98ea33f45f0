// SPDX-License-Identifier: Apache-2.0
#include "csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <nlohmann/json.hpp>

#include "graphcalc/error.hpp"
#include "graphcalc/graph.hpp"

namespace graphcalc {
namespace detail {

std::string_view trim(std::string_view s) {
    const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

namespace {

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        const auto piece = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
        out.emplace_back(trim(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

CsvTable parse_csv(std::string_view text, const std::vector<std::string>& expected_header) {
    // Tolerate a UTF-8 byte-order mark.
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    CsvTable table;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        auto fields = split_fields(line);
        if (!have_header) {
            for (auto& f : fields) f = lower(f);
            if (fields != expected_header) {
                std::string want;
                for (const auto& h : expected_header) want += (want.empty() ? "" : ",") + h;
                throw ValidationError("parse_error", "CSV header must be \"" + want + "\"");
            }
            table.header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != expected_header.size()) {
            throw ValidationError("parse_error", "CSV line " + std::to_string(line_no) + ": expected " +
                                                     std::to_string(expected_header.size()) + " fields");
        }
        table.rows.push_back(std::move(fields));
        table.line_numbers.push_back(line_no);
    }
    if (!have_header) throw ValidationError("parse_error", "CSV input has no header");
    return table;
}

double parse_real(const std::string& field, std::size_t line) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw ValidationError("parse_error",
                              "CSV line " + std::to_string(line) + ": not a finite real: \"" + field + "\"");
    }
    return value;
}

}  // namespace detail

Graph load_graph(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("parse_error", std::string("graph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
        !doc["vertices"].is_array() || !doc["edges"].is_array()) {
        throw ValidationError("parse_error", "graph JSON must be an object with arrays \"vertices\" and \"edges\"");
    }

    std::vector<std::string> names;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw ValidationError("parse_error", "vertex ids must be strings");
        names.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            throw ValidationError("parse_error", "each edge must be a pair of vertex-id strings");
        }
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph::from_edges(std::move(names), edges);
}

}  // namespace graphcalc
