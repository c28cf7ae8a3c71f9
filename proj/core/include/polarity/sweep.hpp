#pragma once

#include <span>
#include <string>
#include <vector>

#include "polarity/conditions.hpp"
#include "polarity/histogram.hpp"
#include "polarity/image.hpp"
#include "polarity/otsu.hpp"

namespace polarity {

enum class Trend { Increasing, Decreasing, Fluctuating };
enum class Polarity { BrightOnDark, DarkOnBright, Indeterminate };

std::string to_string(Trend t);
std::string to_string(Polarity p);

// One point of the gamma sweep.
struct GammaSample {
    double gamma = 0.0;
    double power = 0.0; // 1 / gamma, the exponent actually applied
    double mbcv = 0.0;  // maximum between-class variance after the transform
};

struct GammaCurve {
    std::vector<GammaSample> samples;
    double base_mbcv = 0.0; // mbcv of the untransformed histogram (gamma 1)
};

// The standard grid: 1.0, 1.5, 2.0, ..., 5.0.
std::vector<double> default_gamma_grid();

inline constexpr double kDefaultTrendThreshold = 0.9;

// Evaluate the mbcv curve over a gamma grid. The grid must have at least 3
// entries, start at exactly 1.0, and be strictly increasing
// (std::invalid_argument otherwise). A transformed histogram that collapses
// to a single occupied bin contributes mbcv = 0. With parallel set, grid
// points are evaluated concurrently; results are identical either way.
GammaCurve sweep_mbcv(const Histogram& h, std::span<const double> gammas,
                      bool parallel = true);

// Fraction of adjacent curve steps sharing the majority strict direction:
// max(#rising, #falling) / (#samples - 1). Flat steps count toward the
// denominator only.
double monotone_fraction(const GammaCurve& curve);

// Increasing / Decreasing when the majority direction reaches the
// threshold, Fluctuating otherwise. The threshold must lie in (0.5, 1].
Trend classify_trend(const GammaCurve& curve,
                     double threshold = kDefaultTrendThreshold);

struct DetectConfig {
    std::vector<double> gammas;          // empty -> default_gamma_grid()
    double trend_threshold = kDefaultTrendThreshold;
    ConditionConfig conditions;
    bool parallel = true;
};

struct PolarityReport {
    Polarity polarity = Polarity::Indeterminate;
    Trend trend = Trend::Fluctuating;
    double monotone_fraction = 0.0;
    GammaCurve curve;
    ConditionReport conditions; // diagnostics at gamma 1; never gates polarity
    OtsuResult base;            // Otsu result for the untransformed histogram
};

// Full pipeline: histogram -> sweep -> trend -> polarity, plus diagnostics.
PolarityReport detect_polarity(const Histogram& h, const DetectConfig& cfg = {});
PolarityReport detect_polarity(const GrayImage& img, const DetectConfig& cfg = {});

// CSV round-trip for sweep curves. Header "gamma,power,mbcv"; values are
// written with 17 significant digits so parsing recovers them exactly.
void write_curve_csv(const GammaCurve& curve, const std::string& path);
GammaCurve read_curve_csv(const std::string& path);

} // namespace polarity
