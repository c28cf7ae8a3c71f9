#pragma once

// Shared helpers for the test suites: an independent brute-force reference
// for Otsu's criterion and seeded random input generators. The reference
// deliberately avoids the library's prefix-sum formulation — every
// candidate threshold is scored with fresh per-class sums — so agreement
// between the two is meaningful.

#include <algorithm>
#include <array>
#include <cstdint>

#include "polarity/histogram.hpp"
#include "polarity/image.hpp"
#include "polarity/otsu.hpp"
#include "polarity/rng.hpp"

namespace testsupport {

struct Reference {
    int t_star = -1;
    double mbcv = 0.0;
};

inline double reference_sigma_b2(const polarity::Histogram& h, int t) {
    double w1 = 0.0, w2 = 0.0, s1 = 0.0, s2 = 0.0;
    for (int i = 0; i <= t; ++i) {
        w1 += h.probabilities[i];
        s1 += i * h.probabilities[i];
    }
    for (int i = t + 1; i < polarity::kLevels; ++i) {
        w2 += h.probabilities[i];
        s2 += i * h.probabilities[i];
    }
    if (w1 <= 0.0 || w2 <= 0.0) {
        return -1.0; // no valid split at this t
    }
    const double mu1 = s1 / w1;
    const double mu2 = s2 / w2;
    return w1 * w2 * (mu1 - mu2) * (mu1 - mu2);
}

// Exhaustive scan, ascending t, strict improvement — ties keep the
// smallest maximizing threshold.
inline Reference reference_otsu(const polarity::Histogram& h) {
    Reference r;
    double best = -1.0;
    for (int t = 0; t <= polarity::kMaxThreshold; ++t) {
        const double sb = reference_sigma_b2(h, t);
        if (sb > best) {
            best = sb;
            r.t_star = t;
            r.mbcv = sb;
        }
    }
    return r;
}

// Random histograms in several shapes so the comparison sees dense, sparse,
// spiky, and clustered inputs, not just one family.
inline polarity::Histogram random_histogram(std::uint64_t seed) {
    polarity::SplitMix64 rng(seed);
    std::array<std::uint64_t, polarity::kLevels> counts{};
    switch (rng.next() % 4) {
        case 0: // dense: every level gets a small random count
            for (auto& c : counts) {
                c = rng.next() % 1000;
            }
            break;
        case 1: { // sparse: a handful of levels with large counts
            const int k = 2 + static_cast<int>(rng.next() % 24);
            for (int i = 0; i < k; ++i) {
                counts[rng.next() % polarity::kLevels] += 1 + rng.next() % 1000000;
            }
            break;
        }
        case 2: { // two rough clusters
            const int c1 = static_cast<int>(rng.next() % 128);
            const int c2 = 128 + static_cast<int>(rng.next() % 128);
            for (int i = 0; i < 5000; ++i) {
                const int center = (rng.next() % 2) ? c1 : c2;
                const int jitter = static_cast<int>(rng.next() % 31) - 15;
                const int level = std::clamp(center + jitter, 0, 255);
                ++counts[level];
            }
            break;
        }
        default: // one spike plus a thin uniform tail
            counts[rng.next() % polarity::kLevels] = 1 + rng.next() % 100000;
            for (auto& c : counts) {
                c += rng.next() % 3;
            }
            break;
    }
    int occupied = 0;
    for (auto c : counts) {
        if (c > 0) ++occupied;
    }
    if (occupied < 2) {
        ++counts[0];
        ++counts[255];
    }
    return polarity::from_counts(counts);
}

inline polarity::GrayImage random_image(std::uint64_t seed, int width, int height) {
    polarity::SplitMix64 rng(seed);
    polarity::GrayImage img{width, height, {}};
    img.pixels.reserve(static_cast<std::size_t>(width) * height);
    for (int i = 0; i < width * height; ++i) {
        img.pixels.push_back(static_cast<std::uint8_t>(rng.next() % 256));
    }
    return img;
}

inline polarity::BinaryImage random_binary_image(std::uint64_t seed, int width,
                                                 int height) {
    polarity::SplitMix64 rng(seed);
    polarity::BinaryImage img{width, height, {}};
    img.pixels.reserve(static_cast<std::size_t>(width) * height);
    for (int i = 0; i < width * height; ++i) {
        img.pixels.push_back(rng.next() % 2 ? 255 : 0);
    }
    return img;
}

} // namespace testsupport
