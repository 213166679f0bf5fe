#include "epsel/trial_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace epsel {

EndpointSpec::EndpointSpec(double p0_, double odds_ratio_) : p0(p0_), odds_ratio(odds_ratio_) {
    if (!(p0 > 0.0 && p0 < 1.0))
        throw std::invalid_argument("EndpointSpec: p0 must lie in (0,1), got " + std::to_string(p0));
    if (!(odds_ratio > 0.0))
        throw std::invalid_argument("EndpointSpec: odds ratio must be positive, got " +
                                    std::to_string(odds_ratio));
}

double JointBinaryModel::rho() const {
    const double m1 = p1(), m2 = p2();
    return (p11 - m1 * m2) / std::sqrt(m1 * (1.0 - m1) * m2 * (1.0 - m2));
}

static void require_open_unit(double p, const char* name) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument(std::string(name) + " must lie in (0,1), got " +
                                    std::to_string(p));
}

Interval valid_correlation_range(double p1, double p2) {
    require_open_unit(p1, "p1");
    require_open_unit(p2, "p2");
    const double q1 = 1.0 - p1, q2 = 1.0 - p2;
    const double lo = std::max(-std::sqrt(p1 * p2 / (q1 * q2)), -std::sqrt(q1 * q2 / (p1 * p2)));
    const double hi = std::min(std::sqrt(p1 * q2 / (q1 * p2)), std::sqrt(q1 * p2 / (p1 * q2)));
    return {lo, hi};
}

JointBinaryModel build_joint(double p1, double p2, double rho) {
    const Interval r = valid_correlation_range(p1, p2);
    if (!r.contains(rho)) throw RhoOutOfBounds(rho, r.lo, r.hi);
    const double q1 = 1.0 - p1, q2 = 1.0 - p2;
    const double s = rho * std::sqrt(p1 * q1 * p2 * q2);
    JointBinaryModel m{p1 * p2 + s, p1 * q2 - s, q1 * p2 - s, q1 * q2 + s};
    // rho at the boundary can leave a cell at -1e-18 through rounding
    m.p11 = std::max(m.p11, 0.0);
    m.p10 = std::max(m.p10, 0.0);
    m.p01 = std::max(m.p01, 0.0);
    m.p00 = std::max(m.p00, 0.0);
    return m;
}

double corr_from_conditional(double p1, double p2, double cond) {
    require_open_unit(p1, "p1");
    require_open_unit(p2, "p2");
    if (!(cond >= 0.0 && cond <= 1.0))
        throw std::invalid_argument("conditional probability must lie in [0,1], got " +
                                    std::to_string(cond));
    const double q1 = 1.0 - p1, q2 = 1.0 - p2;
    const double rho = (cond * p1 - p1 * p2) / std::sqrt(p1 * q1 * p2 * q2);
    const Interval r = valid_correlation_range(p1, p2);
    if (!r.contains(rho)) throw RhoOutOfBounds(rho, r.lo, r.hi);
    return rho;
}

PairCounts sample_pair_counts(const JointBinaryModel& m, std::uint64_t n, Xoshiro256pp& gen) {
    const double t11 = m.p11;
    const double t10 = t11 + m.p10;
    const double t01 = t10 + m.p01;
    PairCounts c;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double u = gen.uniform();
        if (u < t11)
            ++c.n11;
        else if (u < t10)
            ++c.n10;
        else if (u < t01)
            ++c.n01;
        else
            ++c.n00;
    }
    return c;
}

std::vector<std::pair<std::uint8_t, std::uint8_t>> sample_pairs(const JointBinaryModel& m,
                                                                std::uint64_t n,
                                                                std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_pairs: n must be >= 1");
    Xoshiro256pp gen(seed);
    const double t11 = m.p11;
    const double t10 = t11 + m.p10;
    const double t01 = t10 + m.p01;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double u = gen.uniform();
        if (u < t11)
            out.emplace_back(1, 1);
        else if (u < t10)
            out.emplace_back(1, 0);
        else if (u < t01)
            out.emplace_back(0, 1);
        else
            out.emplace_back(0, 0);
    }
    return out;
}

}  // namespace epsel
