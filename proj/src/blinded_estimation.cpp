#include "epsel/blinded_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace epsel {

void BlindedSummary::validate() const {
    if (!(n_tilde > 0)) throw std::invalid_argument("BlindedSummary: n_tilde must be positive");
    if (!(n0_tilde > 0 && n0_tilde < n_tilde))
        throw std::invalid_argument("BlindedSummary: n0_tilde must lie in (0, n_tilde)");
    if (c1 < 0 || c1 > n_tilde || c2 < 0 || c2 > n_tilde)
        throw std::invalid_argument("BlindedSummary: component counts must lie in [0, n_tilde]");
    if (c_star < std::max(c1, c2) - 1e-9)
        throw std::invalid_argument(
            "BlindedSummary: c_star < max(c1, c2) violates the union-count invariant");
    if (c_star > std::min(c1 + c2, n_tilde) + 1e-9)
        throw std::invalid_argument(
            "BlindedSummary: c_star > min(c1 + c2, n_tilde) violates the union-count invariant");
}

double estimate_control_prob(double pooled_p, double odds_ratio, double pi) {
    if (!(odds_ratio > 0.0))
        throw std::invalid_argument("estimate_control_prob: odds ratio must be positive");
    if (!(pi > 0.0 && pi < 1.0))
        throw std::invalid_argument("estimate_control_prob: pi must lie in (0,1)");
    if (!(pooled_p > 0.0 && pooled_p < 1.0))
        throw DegenerateEstimate("pooled event rate at the boundary of (0,1)");
    if (odds_ratio == 1.0) return pooled_p;  // pooled law equals each arm's law

    const auto pooled = [&](double p0) {
        return pi * p0 + (1.0 - pi) * treated_prob(p0, odds_ratio);
    };
    double lo = 1e-12, hi = 1.0 - 1e-12;
    for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (pooled(mid) < pooled_p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

BlindedEstimates estimate_blinded(const BlindedSummary& summary, double or1, double or2) {
    summary.validate();
    const double n = summary.n_tilde;
    if (summary.c_star <= 0.0 || summary.c_star >= n)
        throw DegenerateEstimate("union count is 0 or the whole sample");

    const double lo = 1.0 / (2.0 * n), hi = 1.0 - lo;
    const auto clamp_rate = [&](double c) { return std::clamp(c / n, lo, hi); };
    const double p1_hat = clamp_rate(summary.c1);
    const double p2_hat = clamp_rate(summary.c2);
    const double ps_hat = clamp_rate(summary.c_star);

    const double pi = summary.n0_tilde / n;
    const double w0 = pi, w1 = 1.0 - pi;

    BlindedEstimates est;
    est.p1_0_hat = estimate_control_prob(p1_hat, or1, pi);
    est.p2_0_hat = estimate_control_prob(p2_hat, or2, pi);
    est.p1_1_hat = treated_prob(est.p1_0_hat, or1);
    est.p2_1_hat = treated_prob(est.p2_0_hat, or2);

    const double q1_0 = 1.0 - est.p1_0_hat, q2_0 = 1.0 - est.p2_0_hat;
    const double q1_1 = 1.0 - est.p1_1_hat, q2_1 = 1.0 - est.p2_1_hat;
    const double s0 = std::sqrt(est.p1_0_hat * est.p2_0_hat * q1_0 * q2_0);
    const double s1 = std::sqrt(est.p1_1_hat * est.p2_1_hat * q1_1 * q2_1);
    const double num = ps_hat - w0 * (1.0 - q1_0 * q2_0) - w1 * (1.0 - q1_1 * q2_1);
    est.rho_raw = num / (-w0 * s0 - w1 * s1);

    const Interval r0 = valid_correlation_range(est.p1_0_hat, est.p2_0_hat);
    const Interval r1 = valid_correlation_range(est.p1_1_hat, est.p2_1_hat);
    est.rho_hat = std::clamp(est.rho_raw, std::max(r0.lo, r1.lo), std::min(r0.hi, r1.hi));
    return est;
}

BlindedEstimates estimate_unblinded_counts(const PairCounts& control, const PairCounts& treated) {
    const double n0 = static_cast<double>(control.total());
    const double n1 = static_cast<double>(treated.total());
    if (n0 < 2 || n1 < 2)
        throw std::invalid_argument("estimate_unblinded: both arms need >= 2 subjects");

    // Pearson correlation of two binary columns from the 2x2 tallies:
    // r = (n*n11 - c1*c2) / sqrt(c1 (n-c1) c2 (n-c2)); undefined when a
    // column is constant, in which case the arm gets weight 0.
    const auto arm_corr = [](const PairCounts& a, double n, double& r) {
        const double c1 = static_cast<double>(a.c1()), c2 = static_cast<double>(a.c2());
        const double denom_sq = c1 * (n - c1) * c2 * (n - c2);
        if (denom_sq <= 0.0) return false;
        r = (n * static_cast<double>(a.n11) - c1 * c2) / std::sqrt(denom_sq);
        return true;
    };

    double r0 = 0.0, r1 = 0.0;
    const bool ok0 = arm_corr(control, n0, r0);
    const bool ok1 = arm_corr(treated, n1, r1);
    if (!ok0 && !ok1) throw DegenerateEstimate("constant endpoint column in both arms");
    const double w0 = ok0 ? n0 : 0.0;
    const double w1 = ok1 ? n1 : 0.0;
    const double rho_raw = (w0 * r0 + w1 * r1) / (w0 + w1);

    const auto clamp_rate = [](double c, double n) {
        return std::clamp(c / n, 1.0 / (2.0 * n), 1.0 - 1.0 / (2.0 * n));
    };
    BlindedEstimates est;
    est.p1_0_hat = clamp_rate(static_cast<double>(control.c1()), n0);
    est.p2_0_hat = clamp_rate(static_cast<double>(control.c2()), n0);
    est.p1_1_hat = clamp_rate(static_cast<double>(treated.c1()), n1);
    est.p2_1_hat = clamp_rate(static_cast<double>(treated.c2()), n1);
    est.rho_raw = rho_raw;

    const Interval rc = valid_correlation_range(est.p1_0_hat, est.p2_0_hat);
    const Interval rt = valid_correlation_range(est.p1_1_hat, est.p2_1_hat);
    est.rho_hat = std::clamp(rho_raw, std::max(rc.lo, rt.lo), std::min(rc.hi, rt.hi));
    return est;
}

BlindedEstimates estimate_unblinded(const std::vector<SubjectRecord>& data) {
    PairCounts control, treated;
    for (const SubjectRecord& rec : data) {
        PairCounts& c = (rec.arm == 0) ? control : treated;
        if (rec.x1 && rec.x2)
            ++c.n11;
        else if (rec.x1)
            ++c.n10;
        else if (rec.x2)
            ++c.n01;
        else
            ++c.n00;
    }
    return estimate_unblinded_counts(control, treated);
}

}  // namespace epsel
