// lsob — Laguerre–Sobolev orthogonal polynomial toolkit
// SPDX-License-Identifier: Apache-2.0

#ifndef LSOB_RNG_HPP
#define LSOB_RNG_HPP

#include <cstdint>
#include <random>

namespace lsob {

/// Deterministic uniform generator for test points.  mt19937_64 is fully
/// specified by the standard; the [0,1) mapping avoids the
/// implementation-defined std::uniform_real_distribution.
class rng {
public:
    explicit rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Uniform integer in [0, n).
    std::uint64_t index(std::uint64_t n) { return gen_() % n; }

private:
    std::mt19937_64 gen_;
};

} // namespace lsob

#endif
