// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace irssim {

/// Seeded generator with portable draw functions.  std::mt19937_64 output is
/// fully specified by the standard and the transforms below avoid the
/// implementation-defined distribution classes, so identical seeds produce
/// bit-identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    /// Standard normal via Box-Muller (two uniforms per draw, no cached spare).
    double normal() {
        double u1 = uniform();
        const double u2 = uniform();
        if (u1 < 1e-300) {
            u1 = 1e-300;
        }
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTau * u2);
    }

    /// Circularly symmetric complex Gaussian with E|n|^2 = variance.
    std::complex<double> complex_normal(double variance) {
        const double scale = std::sqrt(variance / 2.0);
        return {scale * normal(), scale * normal()};
    }

private:
    static constexpr double kTau = 6.28318530717958647692;
    std::mt19937_64 engine_;
};

} // namespace irssim
