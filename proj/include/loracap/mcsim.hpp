#ifndef LORACAP_MCSIM_HPP
#define LORACAP_MCSIM_HPP

#include <cstdint>

#include "loracap/oracle.hpp"
#include "loracap/params.hpp"

namespace loracap {

/// One Monte Carlo operating point: PPP interferers on the disk, Rayleigh
/// fading everywhere, capture threshold theta.
struct TrialConfig {
    NetworkScenario scenario;
    int sf = 7;
    double d1_m = 0.0;
    int copies = 1;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    int threads = 1;

    void validate() const;
};

/// Fraction of trials where the faded SNR clears the SF threshold.
McEstimate simulate_connection(const TrialConfig& cfg);

/// Fraction of trials where the desired signal survives the capture test
/// against the summed interference of a Poisson interferer field.
McEstimate simulate_capture(const TrialConfig& cfg);

/// Joint estimate of 1 - H1*Q1 with independent connection and capture
/// draws per trial.
McEstimate simulate_link_outage(const TrialConfig& cfg);

}  // namespace loracap

#endif
