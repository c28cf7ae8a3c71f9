#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace polarity {

// Number of intensity levels handled throughout the library (8-bit images).
inline constexpr int kLevels = 256;

// Single quantization convention used everywhere a real value becomes a
// level: round halves up (0.5 -> 1, 1.5 -> 2, ...).
inline int round_half_up(double x) {
    return static_cast<int>(std::floor(x + 0.5));
}

// Clamp an integer to the representable level range [0, kLevels - 1].
inline std::uint8_t clamp_level(int v) {
    if (v < 0) return 0;
    if (v > kLevels - 1) return static_cast<std::uint8_t>(kLevels - 1);
    return static_cast<std::uint8_t>(v);
}

// 8-bit grayscale image, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // size width * height

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
};

// Image whose pixels are restricted to {0, 255}.
struct BinaryImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // values 0 or 255 only
};

// Photometric inversion: v -> 255 - v.
inline GrayImage invert(const GrayImage& img) {
    GrayImage out{img.width, img.height, {}};
    out.pixels.reserve(img.pixels.size());
    for (std::uint8_t v : img.pixels) {
        out.pixels.push_back(static_cast<std::uint8_t>(255 - v));
    }
    return out;
}

} // namespace polarity
