#include "loracap/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace loracap {

namespace {
constexpr double kSeriesRelTol = 1e-14;
constexpr double kZSwitch = 0.5;
constexpr int kMaxTerms = 2000000;
}  // namespace

double path_gain(const NetworkScenario& scenario, double d_m) {
    if (!(d_m > 0.0)) throw std::domain_error("path_gain: distance must be positive");
    return std::pow(d_m / scenario.ref_dist_m, -scenario.ploss_exponent) /
           scenario.ploss_ref_linear;
}

double noise_power_dbm(const NetworkScenario& scenario) {
    return -174.0 + scenario.noise_figure_db + 10.0 * std::log10(scenario.bandwidth_hz);
}

double connection_prob(const NetworkScenario& scenario, int sf, double d1_m) {
    if (!(d1_m > 0.0) || d1_m > scenario.radius_m)
        throw std::domain_error("connection_prob: d1 must be in (0, radius]");
    double q_linear = std::pow(10.0, sf_params_for(sf).snr_threshold_db / 10.0);
    double mean_snr = scenario.tx_power_w * path_gain(scenario, d1_m) / scenario.noise_w;
    return std::exp(-q_linear / mean_snr);
}

double hyp2f1_capture(double eta, double z) {
    if (!(eta > 2.0)) throw std::domain_error("hyp2f1_capture: eta must exceed 2");
    if (!(z >= 0.0)) throw std::domain_error("hyp2f1_capture: z must be non-negative");
    double b = 2.0 / eta;
    if (z <= kZSwitch) {
        // 2F1(1, b; b+1; -z) = b * sum_k (-z)^k / (b + k)
        double sum = 0.0;
        double zk = 1.0;
        for (int k = 0; k < kMaxTerms; ++k) {
            double term = zk / (b + k);
            sum += term;
            if (std::abs(term) < kSeriesRelTol * std::abs(sum)) return b * sum;
            zk *= -z;
        }
        throw std::runtime_error("hyp2f1_capture: direct series did not converge");
    }
    // Pfaff: 2F1(1, b; b+1; -z) = (1+z)^-1 2F1(1, 1; b+1; z/(1+z))
    double w = z / (1.0 + z);
    double sum = 0.0;
    double term = 1.0;
    for (int k = 0; k < kMaxTerms; ++k) {
        sum += term;
        if (term < kSeriesRelTol * sum) return sum / (1.0 + z);
        term *= (k + 1.0) / (b + 1.0 + k) * w;
    }
    throw std::runtime_error("hyp2f1_capture: transformed series did not converge");
}

double capture_prob(const NetworkScenario& scenario, int sf, double d1_m, int copies) {
    if (!(d1_m > 0.0) || d1_m > scenario.radius_m)
        throw std::domain_error("capture_prob: d1 must be in (0, radius]");
    if (copies < 1) throw std::domain_error("capture_prob: copies must be >= 1");
    double z = std::pow(scenario.radius_m / d1_m, scenario.ploss_exponent) /
               scenario.theta_linear;
    double f21 = hyp2f1_capture(scenario.ploss_exponent, z);
    double area = std::numbers::pi * scenario.radius_m * scenario.radius_m;
    double alpha = scenario.density(sf) * copies * activity_factor(scenario, sf);
    return std::exp(-2.0 * area * alpha * f21);
}

OutageBreakdown link_outage(const NetworkScenario& scenario, int sf, double d1_m, int copies) {
    OutageBreakdown b;
    b.distance_m = d1_m;
    b.sf = sf;
    b.copies = copies;
    b.h1 = connection_prob(scenario, sf, d1_m);
    b.q1 = capture_prob(scenario, sf, d1_m, copies);
    b.link_outage = 1.0 - b.h1 * b.q1;
    return b;
}

}  // namespace loracap
