// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphcalc::cli {

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out` (or the --out file), errors to `err` as JSON.
/// Returns 0 on success, 1 on invalid input, 2 on numerical failure.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphcalc::cli
