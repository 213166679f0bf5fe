#pragma once

#include <cstdint>
#include <vector>

#include "epsel/design_math.hpp"
#include "epsel/trial_model.hpp"

namespace epsel {

// Pooled (treatment-blinded) event counts from the first n_tilde subjects.
// Counts are real-valued so that exact expectations can be fed through the
// estimator in tests; simulated data always passes integers.
struct BlindedSummary {
    double n_tilde;   // blinded sample size
    double n0_tilde;  // assumed control count, pi * n_tilde
    double c1;        // events of endpoint 1
    double c2;        // events of endpoint 2
    double c_star;    // events of the union

    void validate() const;
};

struct BlindedEstimates {
    double p1_0_hat = 0, p2_0_hat = 0;  // control-arm event probabilities
    double p1_1_hat = 0, p2_1_hat = 0;  // implied treated-arm probabilities
    double rho_hat = 0;                 // after clamping to the valid intersection
    double rho_raw = 0;                 // before clamping
};

// Unique root p0 of  pi*p0 + (1-pi)*treated_prob(p0, or) = pooled_p,
// by bisection on (0,1) to absolute tolerance 1e-10 (the objective is
// strictly increasing).  Throws DegenerateEstimate at pooled_p in {0,1}.
double estimate_control_prob(double pooled_p, double odds_ratio, double pi);

// Blinded estimates of the control probabilities and the correlation, given
// the pre-specified effect sizes.  Pooled rates are clamped to
// [1/(2n), 1 - 1/(2n)]; rho_hat is clamped to the intersection of both
// arms' valid correlation ranges.  Throws DegenerateEstimate when the union
// count is 0 or n_tilde.
BlindedEstimates estimate_blinded(const BlindedSummary& summary, double or1, double or2);

// Unblinded variant (negative control): control probabilities are observed
// control-arm frequencies; rho is the arm-size-weighted average of
// within-arm Pearson correlations, clamped to the intersection of the
// observed arms' valid ranges.  An arm with a constant column contributes
// weight 0; both arms degenerate throws DegenerateEstimate.
struct SubjectRecord {
    std::uint8_t arm;  // 0 = control
    std::uint8_t x1, x2;
};

BlindedEstimates estimate_unblinded(const std::vector<SubjectRecord>& data);

// Same estimator from per-arm cell tallies (what the simulator produces).
BlindedEstimates estimate_unblinded_counts(const PairCounts& control, const PairCounts& treated);

}  // namespace epsel
