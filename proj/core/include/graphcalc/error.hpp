// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace graphcalc {

/// Bad input: malformed files, unknown vertices, violated preconditions.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    /// Stable machine-readable tag, e.g. "self_loop" or "disconnected_interior".
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// A computation that cannot proceed on valid input (indefinite system,
/// divergent Green integral, solver non-convergence).
class NumericalError : public std::runtime_error {
public:
    NumericalError(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

}  // namespace graphcalc
