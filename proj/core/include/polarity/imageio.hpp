#pragma once

#include <string>

#include "polarity/image.hpp"

namespace polarity {

// ITU-R BT.601 luma, rounded to the nearest level.
int rgb_to_gray(int r, int g, int b);

// Read a PGM (P2/P5) or PPM (P3/P6) file as grayscale. Color inputs are
// converted per-pixel with rgb_to_gray. Samples with maxval != 255 are
// rescaled to [0, 255] with round-half-up; maxval > 65535 is rejected as
// unsupported. Malformed or truncated data raises format_error with the
// byte offset of the failure.
GrayImage read_gray(const std::string& path);

// Write a grayscale image as binary PGM (P5, maxval 255). The header is
// exactly "P5\n<width> <height>\n255\n" — one whitespace byte after the
// maxval — followed by width*height raw bytes.
void write_gray(const GrayImage& img, const std::string& path);

// Same format as write_gray, but validates that every pixel is 0 or 255.
void write_binary(const BinaryImage& img, const std::string& path);

} // namespace polarity
