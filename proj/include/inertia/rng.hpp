#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace inertia {

/// Seedable portable random stream: a Mersenne Twister (mt19937_64, whose
/// output sequence is fixed by the standard) with explicit conversions, so
/// the same seed reproduces the same matrices on any platform.
///
/// Streams draw in documented order: uniform() consumes one engine output;
/// normal() consumes two (Box-Muller, cosine branch, no caching).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1): the top 53 bits of one output.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_open0() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal deviate via Box-Muller.
    double normal() {
        double u1 = uniform_open0();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Uniform integer in [lo, hi] by rejection-free modulo on 64-bit output
    /// (bias is negligible for the small ranges used here).
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// +1 or -1 with equal probability.
    double random_sign() { return (engine_() & 1u) ? 1.0 : -1.0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace inertia
