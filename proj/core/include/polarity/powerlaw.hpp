#pragma once

#include <array>
#include <cstdint>

#include "polarity/histogram.hpp"
#include "polarity/image.hpp"

namespace polarity {

// Validated gamma parameter for the power-law point transform
// o = i^(1/gamma). Must be strictly positive and finite.
class Gamma {
public:
    explicit Gamma(double value);
    double value() const noexcept { return value_; }
    double power() const noexcept { return 1.0 / value_; } // the exponent used

private:
    double value_;
};

// Transform a single level: round_half_up(((v/255)^(1/gamma)) * 255).
// 0 and 255 are exact fixed points for every gamma.
std::uint8_t transform_level(std::uint8_t v, Gamma gamma);

// All 256 transformed levels as a lookup table.
std::array<std::uint8_t, kLevels> level_map(Gamma gamma);

// Apply the transform per pixel.
GrayImage transform_image(const GrayImage& img, Gamma gamma);

// Remap a histogram through the level map; bit-identical to building a
// histogram of the transformed image, at O(levels) instead of O(pixels).
Histogram transform_histogram(const Histogram& h, Gamma gamma);

} // namespace polarity
