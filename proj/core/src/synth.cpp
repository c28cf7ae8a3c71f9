#include "polarity/synth.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polarity/rng.hpp"

namespace polarity {

void SynthSpec::validate() const {
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("image dimensions must be positive");
    }
    if (!(mode1_mean >= 0.0) || mode1_mean > 1.0 ||
        !(mode2_mean >= 0.0) || mode2_mean > 1.0) {
        throw std::invalid_argument("mode means must lie in [0, 1]");
    }
    if (!(mode1_std >= 0.0) || !(mode2_std >= 0.0)) {
        throw std::invalid_argument("mode standard deviations must be non-negative");
    }
    if (!(weight1 >= 0.0) || weight1 > 1.0) {
        throw std::invalid_argument("weight1 must lie in [0, 1]");
    }
}

GrayImage generate(const SynthSpec& spec) {
    spec.validate();
    SplitMix64 rng(spec.seed);
    GrayImage img{spec.width, spec.height, {}};
    img.pixels.reserve(static_cast<std::size_t>(spec.width) * spec.height);

    const std::size_t n = static_cast<std::size_t>(spec.width) * spec.height;
    for (std::size_t i = 0; i < n; ++i) {
        // Fixed draw order, three per pixel, so images are reproducible
        // from the seed alone: mode selection, then the two Box-Muller
        // uniforms. u1 is kept away from 0 for the logarithm.
        const double u_select = rng.next_unit();
        const double u1 = rng.next_unit_open0();
        const double u2 = rng.next_unit();

        const bool first = u_select < spec.weight1;
        const double mean = first ? spec.mode1_mean : spec.mode2_mean;
        const double std_dev = first ? spec.mode1_std : spec.mode2_std;

        const double z = std::sqrt(-2.0 * std::log(u1)) *
                         std::cos(2.0 * std::numbers::pi * u2);
        const double value = (mean + std_dev * z) * 255.0;
        img.pixels.push_back(clamp_level(round_half_up(value)));
    }
    return img;
}

SynthSpec case_i_spec(std::uint64_t seed) {
    SynthSpec s;
    s.mode1_mean = 0.0;
    s.mode1_std = 0.002;
    s.mode2_mean = 0.18;
    s.mode2_std = 0.03;
    s.weight1 = 0.5;
    s.seed = seed;
    return s;
}

SynthSpec case_ii_spec(std::uint64_t seed) {
    SynthSpec s;
    s.mode1_mean = 0.40;
    s.mode1_std = 0.12;
    s.mode2_mean = 0.95;
    s.mode2_std = 0.02;
    s.weight1 = 0.5;
    s.seed = seed;
    return s;
}

SynthSpec unimodal_spec(std::uint64_t seed) {
    SynthSpec s;
    s.mode1_mean = 0.20;
    s.mode1_std = 0.07;
    s.mode2_mean = 0.55;
    s.mode2_std = 0.20;
    s.weight1 = 0.90;
    s.seed = seed;
    return s;
}

} // namespace polarity
