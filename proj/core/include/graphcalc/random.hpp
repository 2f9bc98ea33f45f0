// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace graphcalc {

/// Seeded generator shared by every randomized suite.
///
/// The engine is the 64-bit linear congruential generator
///     state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
/// and the conversions below are written out explicitly (the standard
/// distributions are implementation-defined), so the exact same stream can be
/// reproduced in any language.
class Rng {
public:
    using Engine = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                                   1442695040888963407ULL, 0ULL>;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return static_cast<std::uint64_t>(uniform() * n); }

    /// Standard normal via Box-Muller (one variate per call, no caching).
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    Engine engine_;
};

}  // namespace graphcalc
