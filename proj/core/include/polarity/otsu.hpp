#pragma once

#include "polarity/histogram.hpp"
#include "polarity/image.hpp"

namespace polarity {

// Candidate thresholds are t in [0, kMaxThreshold]; a threshold t puts
// levels <= t into class 1 and levels > t into class 2, so 255 can never be
// a valid split point.
inline constexpr int kMaxThreshold = kLevels - 2;

// Class statistics for one candidate threshold.
struct ClassStats {
    int t = 0;
    double w1 = 0.0; // probability mass of class 1 (levels <= t)
    double w2 = 0.0; // probability mass of class 2 (levels > t)
    double mu1 = 0.0; // mean of class 1 (0 if the class is empty)
    double mu2 = 0.0; // mean of class 2 (0 if the class is empty)
    double sigma_b2 = 0.0; // between-class variance w1 * w2 * (mu1 - mu2)^2
};

struct OtsuResult {
    int t_star = 0; // argmax of sigma_b2; ties resolved to the smallest t
    double mbcv = 0.0; // sigma_b2 at t_star
    ClassStats stats; // full statistics at t_star
    double mu_T = 0.0; // total mean of the histogram
};

// Mean intensity of the whole histogram.
double total_mean(const Histogram& h);

// Statistics for a single threshold, computed with direct per-class sums.
// Throws std::out_of_range if t is outside [0, kMaxThreshold].
ClassStats class_stats(const Histogram& h, int t);

// Otsu's method: maximize between-class variance over all thresholds.
// Throws degenerate_histogram_error if fewer than two bins are occupied.
OtsuResult otsu_threshold(const Histogram& h);

// Split an image at threshold t: v <= t -> 0, v > t -> 255. With invert
// set, the output values are swapped.
BinaryImage binarize(const GrayImage& img, int t, bool invert = false);

} // namespace polarity
