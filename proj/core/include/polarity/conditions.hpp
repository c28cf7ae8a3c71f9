#pragma once

#include "polarity/otsu.hpp"

namespace polarity {

// Tunable cutoffs for the two diagnostic threshold-placement checks. The
// defaults below are artifact choices, not measured constants; CLI output
// reports them so runs remain self-describing.
struct ConditionConfig {
    double balance_tol = 0.3; // |w1 - w2| <= balance_tol counts as balanced
    double epsilon = 0.2;     // case I: normalized class-mean gap < epsilon
    double delta = 0.5;       // case II: normalized class-mean gap > delta
    double t_low = 0.35;      // case I: normalized threshold <= t_low
    double t_high = 0.65;     // case II: normalized threshold >= t_high

    // Throws std::invalid_argument on out-of-range cutoffs.
    void validate() const;
};

// Diagnostics about where Otsu's threshold fell. These never influence the
// polarity decision; they describe whether the split looks like a
// low-threshold / small-gap split (case I) or a high-threshold / large-gap
// split (case II).
struct ConditionReport {
    double w1 = 0.0;
    double w2 = 0.0;
    double t_star_norm = 0.0;  // t* / 255
    double mean_gap_norm = 0.0; // |mu1 - mu2| / 255
    bool balanced = false;
    bool case_i = false;
    bool case_ii = false;
};

ConditionReport check_conditions(const OtsuResult& r,
                                 const ConditionConfig& cfg = {});

} // namespace polarity
