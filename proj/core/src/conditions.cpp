#include "polarity/conditions.hpp"

#include <cmath>
#include <stdexcept>

namespace polarity {

void ConditionConfig::validate() const {
    if (!(balance_tol > 0.0) || balance_tol > 1.0) {
        throw std::invalid_argument("balance_tol must be in (0, 1]");
    }
    if (!(epsilon > 0.0) || epsilon > 1.0) {
        throw std::invalid_argument("epsilon must be in (0, 1]");
    }
    if (!(delta > 0.0) || delta > 1.0) {
        throw std::invalid_argument("delta must be in (0, 1]");
    }
    if (!(t_low > 0.0) || !(t_low < 1.0)) {
        throw std::invalid_argument("t_low must be in (0, 1)");
    }
    if (!(t_high > 0.0) || !(t_high < 1.0)) {
        throw std::invalid_argument("t_high must be in (0, 1)");
    }
    if (!(t_low < t_high)) {
        throw std::invalid_argument("t_low must be less than t_high");
    }
}

ConditionReport check_conditions(const OtsuResult& r, const ConditionConfig& cfg) {
    cfg.validate();
    ConditionReport rep;
    rep.w1 = r.stats.w1;
    rep.w2 = r.stats.w2;
    rep.t_star_norm = static_cast<double>(r.t_star) / (kLevels - 1);
    rep.mean_gap_norm = std::abs(r.stats.mu1 - r.stats.mu2) / (kLevels - 1);
    rep.balanced = std::abs(rep.w1 - rep.w2) <= cfg.balance_tol;
    rep.case_i = rep.balanced && rep.t_star_norm <= cfg.t_low &&
                 rep.mean_gap_norm < cfg.epsilon;
    rep.case_ii = rep.balanced && rep.t_star_norm >= cfg.t_high &&
                  rep.mean_gap_norm > cfg.delta;
    return rep;
}

} // namespace polarity
