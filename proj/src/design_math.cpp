#include "epsel/design_math.hpp"

#include <boost/math/distributions/normal.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace epsel {

void DesignConfig::validate() const {
    if (!(alpha > 0.0 && alpha < 0.5))
        throw std::invalid_argument("DesignConfig: alpha must lie in (0,0.5)");
    if (!(power > 0.5 && power < 1.0))
        throw std::invalid_argument("DesignConfig: power must lie in (0.5,1)");
    if (!(pi > 0.0 && pi < 1.0))
        throw std::invalid_argument("DesignConfig: pi must lie in (0,1)");
    if (arms < 1) throw std::invalid_argument("DesignConfig: arms must be >= 1");
    if (!(alpha + (1.0 - power) < 1.0))
        throw std::invalid_argument("DesignConfig: alpha + (1-power) must be below 1");
}

double normal_quantile(double p) {
    static const boost::math::normal_distribution<double> std_normal(0.0, 1.0);
    return boost::math::quantile(std_normal, p);
}

double treated_prob(double p0, double odds_ratio) {
    if (!(p0 > 0.0 && p0 < 1.0))
        throw std::invalid_argument("treated_prob: p0 must lie in (0,1)");
    if (!(odds_ratio > 0.0))
        throw std::invalid_argument("treated_prob: odds ratio must be positive");
    if (odds_ratio == 1.0) return p0;  // keep the null case exact
    const double odds = odds_ratio * (p0 / (1.0 - p0));
    return odds / (1.0 + odds);
}

TestResult wald_logor_test(std::uint64_t x0, std::uint64_t n0, std::uint64_t x1, std::uint64_t n1,
                           double alpha) {
    if (n0 < 2 || n1 < 2) throw std::invalid_argument("wald_logor_test: arm sizes must be >= 2");
    if (x0 > n0 || x1 > n1)
        throw std::invalid_argument("wald_logor_test: event count exceeds arm size");
    if (!(alpha > 0.0 && alpha < 0.5))
        throw std::invalid_argument("wald_logor_test: alpha must lie in (0,0.5)");

    double a = static_cast<double>(x1), b = static_cast<double>(n1 - x1);
    double c = static_cast<double>(x0), d = static_cast<double>(n0 - x0);
    if (a == 0.0 || b == 0.0 || c == 0.0 || d == 0.0) {
        a += 0.5;
        b += 0.5;
        c += 0.5;
        d += 0.5;
    }
    // 1/(n p q) with p = x/n collapses to 1/x + 1/(n-x)
    const double log_or = std::log((a / b) / (c / d));
    const double se = std::sqrt(1.0 / a + 1.0 / b + 1.0 / c + 1.0 / d);
    const double z = log_or / se;
    return TestResult{z, log_or, z < normal_quantile(alpha)};
}

std::uint64_t round_to_allocation(double n, double pi) {
    if (!(n >= 0.0) || !std::isfinite(n))
        throw std::invalid_argument("round_to_allocation: n must be finite and nonnegative");
    auto integral = [](double x) { return std::fabs(x - std::round(x)) < 1e-9; };
    const auto start = static_cast<std::uint64_t>(std::ceil(n - 1e-9));
    for (std::uint64_t m = start; m < start + 1000000; ++m) {
        if (integral(pi * static_cast<double>(m)) && integral((1.0 - pi) * static_cast<double>(m)))
            return m;
    }
    return start;  // pi has no small denominator; plain ceiling
}

double sample_size_single_unrounded(double p0, double odds_ratio, const DesignConfig& cfg) {
    cfg.validate();
    if (!(p0 > 0.0 && p0 < 1.0))
        throw std::invalid_argument("sample_size_single: p0 must lie in (0,1)");
    if (!(odds_ratio > 0.0))
        throw std::invalid_argument("sample_size_single: odds ratio must be positive");
    if (odds_ratio == 1.0) return std::numeric_limits<double>::infinity();

    const double za = normal_quantile(1.0 - cfg.per_comparison_alpha());
    const double zb = normal_quantile(cfg.power);
    const double p1 = treated_prob(p0, odds_ratio);
    const double ratio = (za + zb) / std::log(odds_ratio);
    return ratio * ratio *
           (1.0 / (cfg.pi * p0 * (1.0 - p0)) + 1.0 / ((1.0 - cfg.pi) * p1 * (1.0 - p1)));
}

std::uint64_t sample_size_single(double p0, double odds_ratio, const DesignConfig& cfg) {
    const double n = sample_size_single_unrounded(p0, odds_ratio, cfg);
    if (!std::isfinite(n)) throw EffectAbsent();
    return round_to_allocation(n, cfg.pi);
}

double composite_event_prob(double p1, double p2, double rho) {
    const Interval r = valid_correlation_range(p1, p2);
    if (!r.contains(rho)) throw RhoOutOfBounds(rho, r.lo, r.hi);
    const double q1 = 1.0 - p1, q2 = 1.0 - p2;
    return 1.0 - q1 * q2 - rho * std::sqrt(p1 * p2 * q1 * q2);
}

double composite_odds_ratio(const EndpointSpec& e1, const EndpointSpec& e2, double rho) {
    const double p1_1 = treated_prob(e1.p0, e1.odds_ratio);
    const double p2_1 = treated_prob(e2.p0, e2.odds_ratio);
    const Interval r0 = valid_correlation_range(e1.p0, e2.p0);
    if (!r0.contains(rho)) throw RhoOutOfBounds(rho, r0.lo, r0.hi, 0);
    const Interval r1 = valid_correlation_range(p1_1, p2_1);
    if (!r1.contains(rho)) throw RhoOutOfBounds(rho, r1.lo, r1.hi, 1);
    const double ps0 = composite_event_prob(e1.p0, e2.p0, rho);
    const double ps1 = composite_event_prob(p1_1, p2_1, rho);
    return (ps1 / (1.0 - ps1)) / (ps0 / (1.0 - ps0));
}

double sample_size_composite_unrounded(const EndpointSpec& e1, const EndpointSpec& e2, double rho,
                                       const DesignConfig& cfg) {
    const double ps0 = composite_event_prob(e1.p0, e2.p0, rho);
    const double or_star = composite_odds_ratio(e1, e2, rho);
    return sample_size_single_unrounded(ps0, or_star, cfg);
}

std::uint64_t sample_size_composite(const EndpointSpec& e1, const EndpointSpec& e2, double rho,
                                    const DesignConfig& cfg) {
    const double n = sample_size_composite_unrounded(e1, e2, rho, cfg);
    if (!std::isfinite(n)) throw EffectAbsent();
    return round_to_allocation(n, cfg.pi);
}

std::uint64_t multiarm_total(std::uint64_t n_per_comparison, const DesignConfig& cfg) {
    cfg.validate();
    if (cfg.arms == 1) return n_per_comparison;
    const double m = static_cast<double>(cfg.arms);
    const double x = static_cast<double>(n_per_comparison) * (m - (m - 1.0) * cfg.pi);
    // snap values that are integral up to rounding noise, then take the ceiling
    const double snapped = (std::fabs(x - std::round(x)) < 1e-6) ? std::round(x) : std::ceil(x);
    return static_cast<std::uint64_t>(snapped);
}

}  // namespace epsel
