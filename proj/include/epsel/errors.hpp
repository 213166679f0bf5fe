#pragma once

#include <stdexcept>
#include <string>

namespace epsel {

// Requested correlation is incompatible with the Bernoulli marginals:
// some cell of the 2x2 joint law would be negative.  Carries the
// admissible interval and, where known, which arm rejected it.
struct RhoOutOfBounds : std::domain_error {
    double rho;
    double lo, hi;
    int arm;  // 0 = control, 1 = treated, -1 = unspecified

    RhoOutOfBounds(double rho_, double lo_, double hi_, int arm_ = -1)
        : std::domain_error("rho " + std::to_string(rho_) + " outside valid range [" +
                            std::to_string(lo_) + ", " + std::to_string(hi_) + "]" +
                            (arm_ >= 0 ? " for arm " + std::to_string(arm_) : "")),
          rho(rho_), lo(lo_), hi(hi_), arm(arm_) {}
};

// Odds ratio of exactly 1: the required sample size is infinite.
struct EffectAbsent : std::domain_error {
    EffectAbsent() : std::domain_error("odds ratio is 1: required sample size is infinite") {}
    explicit EffectAbsent(const std::string& what) : std::domain_error(what) {}
};

// A blinded estimate landed on a boundary that no downstream formula can use
// (e.g. the union count is 0 or the full sample).
struct DegenerateEstimate : std::domain_error {
    explicit DegenerateEstimate(const std::string& what) : std::domain_error(what) {}
};

}  // namespace epsel
