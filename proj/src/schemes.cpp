#include "loracap/schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace loracap {

namespace {

constexpr double kClampSlack = 1e-15;

void check_prob(double o) {
    if (!(o >= 0.0 && o <= 1.0))
        throw std::domain_error("link outage probability must be in [0, 1]");
}

// Absorb floating-point excursions just outside [0, 1].
double clamp01(double p) {
    if (p < 0.0) {
        if (p < -kClampSlack) throw std::runtime_error("probability fell below 0");
        return 0.0;
    }
    if (p > 1.0) {
        if (p > 1.0 + kClampSlack) throw std::runtime_error("probability exceeded 1");
        return 1.0;
    }
    return p;
}

}  // namespace

double outage_rt(double o, int m) {
    check_prob(o);
    if (m < 1) throw std::domain_error("outage_rt: m must be >= 1");
    return std::pow(o, m);
}

double outage_ct(double o, int n) {
    check_prob(o);
    if (n < 0) throw std::domain_error("outage_ct: n must be >= 0");
    double o2 = o * o;
    double o3 = o2 * o;
    double poly = 1.0 + o + o2 - 5.0 * o3 + 4.0 * o2 * o2 - o3 * o2;
    return clamp01(std::pow(o, 2 * n + 1) * std::pow(poly, 2 * n));
}

double event_prob(double o, int m, int r) {
    check_prob(o);
    if (m < 1 || r < 1) throw std::domain_error("event_prob: m and r must be >= 1");
    double om = std::pow(o, m);
    double orr = std::pow(o, r);
    double sm = 1.0 - om;
    double sr = 1.0 - orr;
    return clamp01(sm * sr + om * sm * sr * sr + om * om * sm * sr * sr * sr);
}

double outage_ht(double o, int m, int n, int r) {
    check_prob(o);
    if (m < 1 || n < 0 || r < 1)
        throw std::domain_error("outage_ht: requires m >= 1, n >= 0, r >= 1");
    double chain_fail = 1.0 - event_prob(o, m, r);
    return clamp01(std::pow(o, m) * std::pow(chain_fail, 2 * n));
}

double outage_ht_expanded(double o, int m, int n, int r) {
    check_prob(o);
    if (!(o > 0.0)) throw std::domain_error("outage_ht_expanded: o must be positive");
    double om = std::pow(o, m);
    double orr = std::pow(o, r);
    double f = om * om + (1.0 - om) * (om * orr * orr * orr - orr * orr - 3.0 * om * orr * orr) +
               orr * (1.0 + 1.0 / om + om - 3.0 * om * om);
    return clamp01(std::pow(o, m * (2 * n + 1)) * std::pow(f, 2 * n));
}

SchemeOutage scheme_outage(const SchemeConfig& config, double o) {
    config.validate();
    check_prob(o);
    SchemeOutage result;
    result.config = config;
    result.link_outage = o;
    switch (config.kind) {
        case SchemeKind::DT:
            result.final_outage = o;
            break;
        case SchemeKind::RT:
            result.final_outage = outage_rt(o, config.m);
            break;
        case SchemeKind::CT:
            result.final_outage = outage_ct(o, config.n);
            break;
        case SchemeKind::HT:
            result.final_outage = outage_ht(o, config.m, config.n, config.r);
            break;
    }
    return result;
}

}  // namespace loracap
