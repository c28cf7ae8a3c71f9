#pragma once

#include <cstdint>

namespace polarity {

// splitmix64: tiny, fast, well-distributed 64-bit generator with a one-word
// state. Constants are from the reference implementation (Steele, Lea,
// Flood, "Fast splittable pseudorandom number generators"). Used instead of
// <random> engines so that a given seed produces identical streams on every
// platform and standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1): top 53 bits scaled by 2^-53.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform double in (0, 1]: safe as a logarithm argument.
    double next_unit_open0() {
        return 1.0 - next_unit();
    }

private:
    std::uint64_t state_;
};

} // namespace polarity
