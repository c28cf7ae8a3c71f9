#pragma once

#include <cstdint>

#include "polarity/image.hpp"

namespace polarity {

// Parameters of a two-mode Gaussian mixture test image. Means and standard
// deviations are in normalized intensity units ([0, 1] maps to [0, 255]).
struct SynthSpec {
    int width = 128;
    int height = 128;
    double mode1_mean = 0.0;
    double mode1_std = 0.0;
    double mode2_mean = 0.0;
    double mode2_std = 0.0;
    double weight1 = 0.5; // probability a pixel is drawn from mode 1
    std::uint64_t seed = 0;

    // Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
};

// Generate the image deterministically from spec.seed. Pixels are produced
// in row-major order with exactly three splitmix64 draws each: mode
// selection, then two uniforms feeding a Box-Muller normal sample.
GrayImage generate(const SynthSpec& spec);

// Presets whose detector outcome is known by construction:
//  - case_i_spec:   near-black spike + dark mode; mbcv rises with gamma.
//  - case_ii_spec:  broad mid mode + near-white spike; mbcv falls.
//  - unimodal_spec: one dominant mode; the balance check fails.
SynthSpec case_i_spec(std::uint64_t seed);
SynthSpec case_ii_spec(std::uint64_t seed);
SynthSpec unimodal_spec(std::uint64_t seed);

} // namespace polarity
