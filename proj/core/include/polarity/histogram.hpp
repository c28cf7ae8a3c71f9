#pragma once

#include <array>
#include <cstdint>

#include "polarity/image.hpp"

namespace polarity {

// Intensity histogram of an 8-bit image plus its probability normalization.
struct Histogram {
    std::array<std::uint64_t, kLevels> counts{};
    std::uint64_t total = 0;
    std::array<double, kLevels> probabilities{}; // counts[i] / total

    // Number of levels with a nonzero count.
    int occupied_bins() const {
        int n = 0;
        for (auto c : counts) {
            if (c > 0) ++n;
        }
        return n;
    }
};

// Count pixel intensities of an image. Throws std::invalid_argument on an
// empty image.
Histogram build_histogram(const GrayImage& img);

// Build a histogram directly from per-level counts. Throws
// std::invalid_argument if every count is zero.
Histogram from_counts(const std::array<std::uint64_t, kLevels>& counts);

} // namespace polarity
