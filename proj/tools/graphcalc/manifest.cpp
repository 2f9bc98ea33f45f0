// SPDX-License-Identifier: Apache-2.0
#include "graphcalc/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <sstream>

#include "graphcalc/error.hpp"

namespace graphcalc::cli {

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
        throw NumericalError("digest_failure", "SHA-256 computation failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xF];
    }
    return out;
}

RunManifest::RunManifest(std::vector<std::string> command) : command_(std::move(command)) {}

std::string RunManifest::read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("missing_file", "cannot open input file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    inputs_.emplace_back(path, sha256_hex(text));
    return text;
}

Json RunManifest::to_json() const {
    Json inputs = Json::array();
    for (const auto& [path, digest] : inputs_) inputs.push_back(Json{{"path", path}, {"sha256", digest}});
    return Json{{"tool", "graphcalc"},
                {"version", std::string(kToolVersion)},
                {"command", command_},
                {"inputs", inputs},
                {"config", config_}};
}

}  // namespace graphcalc::cli
