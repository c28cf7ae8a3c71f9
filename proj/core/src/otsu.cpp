#include "polarity/otsu.hpp"

#include <stdexcept>
#include <string>

#include "polarity/errors.hpp"

namespace polarity {

double total_mean(const Histogram& h) {
    double mu = 0.0;
    for (int i = 0; i < kLevels; ++i) {
        mu += i * h.probabilities[i];
    }
    return mu;
}

ClassStats class_stats(const Histogram& h, int t) {
    if (t < 0 || t > kMaxThreshold) {
        throw std::out_of_range("threshold " + std::to_string(t) +
                                " outside [0, " + std::to_string(kMaxThreshold) + "]");
    }
    ClassStats s;
    s.t = t;
    double sum1 = 0.0, sum2 = 0.0;
    for (int i = 0; i <= t; ++i) {
        s.w1 += h.probabilities[i];
        sum1 += i * h.probabilities[i];
    }
    for (int i = t + 1; i < kLevels; ++i) {
        s.w2 += h.probabilities[i];
        sum2 += i * h.probabilities[i];
    }
    s.mu1 = s.w1 > 0.0 ? sum1 / s.w1 : 0.0;
    s.mu2 = s.w2 > 0.0 ? sum2 / s.w2 : 0.0;
    const double gap = s.mu1 - s.mu2;
    s.sigma_b2 = s.w1 * s.w2 * gap * gap;
    return s;
}

OtsuResult otsu_threshold(const Histogram& h) {
    if (h.occupied_bins() < 2) {
        throw degenerate_histogram_error(
            "degenerate histogram: fewer than two occupied bins, "
            "no threshold separates two classes");
    }

    const double mu_T = total_mean(h);

    // One prefix pass over the levels; direction of any ties is fixed by
    // the strict comparison, which keeps the smallest maximizing t.
    int best_t = -1;
    double best = -1.0;
    double w1 = 0.0;
    double sum1 = 0.0;
    for (int t = 0; t <= kMaxThreshold; ++t) {
        w1 += h.probabilities[t];
        sum1 += t * h.probabilities[t];
        const double w2 = 1.0 - w1;
        if (w1 <= 0.0 || w2 <= 0.0) {
            continue;
        }
        const double mu1 = sum1 / w1;
        const double mu2 = (mu_T - sum1) / w2;
        const double gap = mu1 - mu2;
        const double sigma_b2 = w1 * w2 * gap * gap;
        if (sigma_b2 > best) {
            best = sigma_b2;
            best_t = t;
        }
    }

    OtsuResult r;
    r.t_star = best_t;
    // Recompute at the winner with direct sums so the reported statistics
    // are self-consistent rather than accumulated.
    r.stats = class_stats(h, best_t);
    r.mbcv = r.stats.sigma_b2;
    r.mu_T = mu_T;
    return r;
}

BinaryImage binarize(const GrayImage& img, int t, bool invert) {
    if (t < 0 || t > kMaxThreshold) {
        throw std::out_of_range("threshold " + std::to_string(t) +
                                " outside [0, " + std::to_string(kMaxThreshold) + "]");
    }
    const std::uint8_t lo = invert ? 255 : 0;
    const std::uint8_t hi = invert ? 0 : 255;
    BinaryImage out{img.width, img.height, {}};
    out.pixels.reserve(img.pixels.size());
    for (std::uint8_t v : img.pixels) {
        out.pixels.push_back(v <= t ? lo : hi);
    }
    return out;
}

} // namespace polarity
