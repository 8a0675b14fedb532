#pragma once

#include <cstdint>

namespace opdyn {

/// SplitMix64. The generator is pinned (not an implementation detail):
/// instance generation must be reproducible bit-for-bit from the seed,
/// including by re-implementations in other languages, so the exact
/// update and the 53-bit uniform mapping below are part of the file
/// contract documented in the README.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1): top 53 bits scaled by 2^-53.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace opdyn
