#pragma once

#include <cstdint>

#include "epsel/trial_model.hpp"

namespace epsel {

// Global design parameters.  alpha is one-sided; pi is the allocation
// fraction to the control group; arms is the number of treatment arms M
// sharing one control (per-comparison level alpha/M, Bonferroni).
struct DesignConfig {
    double alpha = 0.05;
    double power = 0.80;
    double pi = 0.5;
    int arms = 1;

    void validate() const;
    double per_comparison_alpha() const { return alpha / static_cast<double>(arms); }
};

// Wald Z test on the log odds-ratio scale; treatment-beneficial effects are
// OR < 1, so the rejection region is the lower tail.
struct TestResult {
    double statistic;
    double log_or_hat;
    bool reject;
};

// Lower-tail standard normal quantile.
double normal_quantile(double p);

// Treated-arm event probability implied by (p0, odds ratio).
double treated_prob(double p0, double odds_ratio);

// Two-sample Wald test of H0: OR = 1 against OR < 1.  When any cell of the
// 2x2 table is zero, 0.5 is added to all four cells (Haldane-Anscombe)
// before computing the statistic.
TestResult wald_logor_test(std::uint64_t x0, std::uint64_t n0, std::uint64_t x1, std::uint64_t n1,
                           double alpha);

// Round n up to the next integer for which pi*n and (1-pi)*n are integral
// (for pi = 1/2: the next even integer).
std::uint64_t round_to_allocation(double n, double pi);

// Total two-arm sample size for one binary endpoint,
//   n = ((z_a + z_b) / log OR)^2 * (1/(pi p0 q0) + 1/((1-pi) p1 q1)),
// at per-comparison level alpha/arms.  The unrounded variant returns +inf
// for odds_ratio == 1; the rounded variant throws EffectAbsent.
double sample_size_single_unrounded(double p0, double odds_ratio, const DesignConfig& cfg);
std::uint64_t sample_size_single(double p0, double odds_ratio, const DesignConfig& cfg);

// Composite (union) event probability 1 - q1 q2 - rho*sqrt(p1 p2 q1 q2);
// equals 1 - p00 of build_joint exactly.
double composite_event_prob(double p1, double p2, double rho);

// Composite odds ratio from component specs and the (shared) correlation.
// Throws RhoOutOfBounds tagged with the offending arm.
double composite_odds_ratio(const EndpointSpec& e1, const EndpointSpec& e2, double rho);

// Sample size for the composite endpoint: sample_size_single applied to the
// derived (event probability, odds ratio) pair.
double sample_size_composite_unrounded(const EndpointSpec& e1, const EndpointSpec& e2, double rho,
                                       const DesignConfig& cfg);
std::uint64_t sample_size_composite(const EndpointSpec& e1, const EndpointSpec& e2, double rho,
                                    const DesignConfig& cfg);

// Trial total for M arms sharing one control: ceil(n * (M - (M-1)*pi)).
std::uint64_t multiarm_total(std::uint64_t n_per_comparison, const DesignConfig& cfg);

}  // namespace epsel
