#ifndef LORACAP_CHANNEL_HPP
#define LORACAP_CHANNEL_HPP

#include "loracap/params.hpp"

namespace loracap {

/// Single-link outage decomposition at one operating point.
struct OutageBreakdown {
    double h1 = 0.0;           // connection probability
    double q1 = 0.0;           // capture probability at M copies
    double link_outage = 0.0;  // 1 - h1*q1
    double distance_m = 0.0;
    int sf = 7;
    int copies = 1;
};

/// Linear path gain PL0^-1 (d/d0)^-eta. Requires d > 0.
double path_gain(const NetworkScenario& scenario, double d_m);

/// Receiver noise floor, -174 dBm/Hz + NF + 10 log10(B).
double noise_power_dbm(const NetworkScenario& scenario);

/// Probability that the instantaneous SNR at distance d1 clears the SF's
/// threshold under Rayleigh fading.
double connection_prob(const NetworkScenario& scenario, int sf, double d1_m);

/// 2F1(1, 2/eta; 1 + 2/eta; -z) for eta > 2 and z >= 0.
///
/// Evaluated by the series b * sum_k (-z)^k / (b+k) with b = 2/eta for small
/// z, and through the Pfaff transformation w = z/(1+z) otherwise, since the
/// capture-probability argument is far outside the naive series' radius of
/// convergence for interior nodes. Throws std::runtime_error if either
/// series fails to converge within the iteration budget.
double hyp2f1_capture(double eta, double z);

/// Capture probability for a node at d1 using SF j when every device sends
/// M copies per period (interferer intensity doubled for unslotted ALOHA).
double capture_prob(const NetworkScenario& scenario, int sf, double d1_m, int copies);

/// Combined connection x capture bound for one transmission.
OutageBreakdown link_outage(const NetworkScenario& scenario, int sf, double d1_m, int copies);

}  // namespace loracap

#endif
