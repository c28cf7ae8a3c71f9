#include "polarity/histogram.hpp"

#include <stdexcept>

namespace polarity {

namespace {

void normalize(Histogram& h) {
    if (h.total == 0) {
        throw std::invalid_argument("histogram has no samples");
    }
    const double total = static_cast<double>(h.total);
    for (int i = 0; i < kLevels; ++i) {
        h.probabilities[i] = static_cast<double>(h.counts[i]) / total;
    }
}

} // namespace

Histogram build_histogram(const GrayImage& img) {
    if (img.pixels.empty()) {
        throw std::invalid_argument("cannot build a histogram of an empty image");
    }
    Histogram h;
    for (std::uint8_t v : img.pixels) {
        ++h.counts[v];
    }
    h.total = img.pixels.size();
    normalize(h);
    return h;
}

Histogram from_counts(const std::array<std::uint64_t, kLevels>& counts) {
    Histogram h;
    h.counts = counts;
    for (auto c : counts) {
        h.total += c;
    }
    normalize(h);
    return h;
}

} // namespace polarity
