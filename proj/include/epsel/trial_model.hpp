#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "epsel/errors.hpp"
#include "epsel/rng.hpp"

namespace epsel {

// Marginal design parameters of one binary endpoint: control-arm event
// probability p^(0) and the assumed odds ratio (treatment vs control).
struct EndpointSpec {
    double p0;
    double odds_ratio;

    EndpointSpec(double p0_, double odds_ratio_);
};

struct Interval {
    double lo, hi;
    bool contains(double x) const { return x >= lo && x <= hi; }
};

// Full 2x2 joint law of (X1, X2) in one arm; the simulation ground truth.
// Cell p11 = P(X1=1, X2=1) etc.; the Pearson correlation rho lives in the
// cells via p11 = p1*p2 + rho*sqrt(p1 q1 p2 q2).
struct JointBinaryModel {
    double p11, p10, p01, p00;

    double p1() const { return p11 + p10; }
    double p2() const { return p11 + p01; }
    double rho() const;  // Pearson correlation recovered from the cells
};

struct ArmModel {
    JointBinaryModel joint;
    int label;  // 0 = control
};

// The exact set of rho compatible with the given marginals (all four cells
// of build_joint nonnegative): the Frechet bounds for two Bernoullis.
Interval valid_correlation_range(double p1, double p2);

// Joint law with exact marginals (p1, p2) and Pearson correlation rho.
// Throws RhoOutOfBounds when rho is outside valid_correlation_range.
JointBinaryModel build_joint(double p1, double p2, double rho);

// Pearson correlation implied by the conditional probability P(e2 | e1).
// Throws RhoOutOfBounds when the implied cells are negative.
double corr_from_conditional(double p1, double p2, double cond);

// Aggregated draws from one arm's joint law: counts per 2x2 cell.  This is
// all the simulator needs; per-subject storage exists only for the
// unblinded-estimator variant.
struct PairCounts {
    std::uint64_t n11 = 0, n10 = 0, n01 = 0, n00 = 0;

    std::uint64_t total() const { return n11 + n10 + n01 + n00; }
    std::uint64_t c1() const { return n11 + n10; }       // events of endpoint 1
    std::uint64_t c2() const { return n11 + n01; }       // events of endpoint 2
    std::uint64_t c_star() const { return n11 + n10 + n01; }  // union events

    PairCounts& operator+=(const PairCounts& o) {
        n11 += o.n11;
        n10 += o.n10;
        n01 += o.n01;
        n00 += o.n00;
        return *this;
    }
};

// n categorical draws from the four-cell law, tallied.  Advances gen.
PairCounts sample_pair_counts(const JointBinaryModel& m, std::uint64_t n, Xoshiro256pp& gen);

// n independent draws as explicit pairs; identical seed => identical
// sequence on every platform.
std::vector<std::pair<std::uint8_t, std::uint8_t>> sample_pairs(const JointBinaryModel& m,
                                                                std::uint64_t n,
                                                                std::uint64_t seed);

}  // namespace epsel
