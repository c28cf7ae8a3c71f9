#include "polarity/powerlaw.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polarity {

Gamma::Gamma(double value) : value_(value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument("gamma must be a positive finite number, got " +
                                    std::to_string(value));
    }
}

std::uint8_t transform_level(std::uint8_t v, Gamma gamma) {
    // 0 and 255 are fixed points of x^p on [0, 1]; return them directly so
    // no rounding can perturb the endpoints.
    if (v == 0 || v == 255 || gamma.value() == 1.0) {
        return v;
    }
    const double normalized = static_cast<double>(v) / 255.0;
    const double out = std::pow(normalized, gamma.power()) * 255.0;
    return clamp_level(round_half_up(out));
}

std::array<std::uint8_t, kLevels> level_map(Gamma gamma) {
    std::array<std::uint8_t, kLevels> map{};
    for (int v = 0; v < kLevels; ++v) {
        map[v] = transform_level(static_cast<std::uint8_t>(v), gamma);
    }
    return map;
}

GrayImage transform_image(const GrayImage& img, Gamma gamma) {
    const auto map = level_map(gamma);
    GrayImage out{img.width, img.height, {}};
    out.pixels.reserve(img.pixels.size());
    for (std::uint8_t v : img.pixels) {
        out.pixels.push_back(map[v]);
    }
    return out;
}

Histogram transform_histogram(const Histogram& h, Gamma gamma) {
    const auto map = level_map(gamma);
    Histogram out;
    out.total = h.total;
    for (int v = 0; v < kLevels; ++v) {
        out.counts[map[v]] += h.counts[v];
    }
    if (out.total == 0) {
        throw std::invalid_argument("histogram has no samples");
    }
    const double total = static_cast<double>(out.total);
    for (int i = 0; i < kLevels; ++i) {
        out.probabilities[i] = static_cast<double>(out.counts[i]) / total;
    }
    return out;
}

} // namespace polarity
