#include "loracap/mcsim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "loracap/channel.hpp"
#include "loracap/rng.hpp"

namespace loracap {

void TrialConfig::validate() const {
    if (trials < 1) throw std::domain_error("mcsim: trials must be >= 1");
    if (!(d1_m > 0.0) || d1_m > scenario.radius_m)
        throw std::domain_error("mcsim: d1 must be in (0, radius]");
    if (copies < 1) throw std::domain_error("mcsim: copies must be >= 1");
    if (sf < kSfMin || sf > kSfMax) throw std::domain_error("mcsim: sf must be in 7..12");
}

namespace {

McEstimate finish(std::uint64_t successes, std::uint64_t trials, bool complement) {
    McEstimate e;
    e.trials = trials;
    double frac = static_cast<double>(successes) / static_cast<double>(trials);
    e.value = complement ? 1.0 - frac : frac;
    e.std_error = std::sqrt(frac * (1.0 - frac) / static_cast<double>(trials));
    return e;
}

// Partition the trial range over workers; per-trial counter streams keep
// the result independent of the partitioning.
template <typename TrialFn>
std::uint64_t run_trials(const TrialConfig& cfg, TrialFn&& trial_success) {
    int workers = std::max(1, cfg.threads);
    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::uint64_t lo = cfg.trials * w / workers;
            std::uint64_t hi = cfg.trials * (w + 1) / workers;
            std::uint64_t ok = 0;
            for (std::uint64_t t = lo; t < hi; ++t) {
                CounterRng rng(cfg.seed, t);
                if (trial_success(rng)) ++ok;
            }
            counts[w] = ok;
        });
    }
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

struct ConnectionDraw {
    double q_over_mean_snr;  // q_j / mean border SNR at d1
    bool operator()(CounterRng& rng) const { return rng.next_exp() >= q_over_mean_snr; }
};

ConnectionDraw make_connection_draw(const TrialConfig& cfg) {
    double q_linear = std::pow(10.0, sf_params_for(cfg.sf).snr_threshold_db / 10.0);
    double mean_snr = cfg.scenario.tx_power_w * path_gain(cfg.scenario, cfg.d1_m) /
                      cfg.scenario.noise_w;
    return {q_linear / mean_snr};
}

struct CaptureDraw {
    double mean_interferers;  // 2 rho M p pi R^2
    double radius_m;
    double d1_m;
    double eta;
    double theta;

    bool operator()(CounterRng& rng) const {
        std::uint32_t k = rng.next_poisson(mean_interferers);
        double desired = rng.next_exp() * std::pow(d1_m, -eta);
        double interference = 0.0;
        for (std::uint32_t i = 0; i < k; ++i) {
            double dk = radius_m * std::sqrt(rng.next_double());
            interference += rng.next_exp() * std::pow(dk, -eta);
        }
        return desired > theta * interference;
    }
};

CaptureDraw make_capture_draw(const TrialConfig& cfg) {
    const NetworkScenario& s = cfg.scenario;
    double area = std::numbers::pi * s.radius_m * s.radius_m;
    double mean = 2.0 * s.density(cfg.sf) * cfg.copies * activity_factor(s, cfg.sf) * area;
    return {mean, s.radius_m, cfg.d1_m, s.ploss_exponent, s.theta_linear};
}

}  // namespace

McEstimate simulate_connection(const TrialConfig& cfg) {
    cfg.validate();
    ConnectionDraw conn = make_connection_draw(cfg);
    return finish(run_trials(cfg, conn), cfg.trials, false);
}

McEstimate simulate_capture(const TrialConfig& cfg) {
    cfg.validate();
    CaptureDraw capt = make_capture_draw(cfg);
    return finish(run_trials(cfg, capt), cfg.trials, false);
}

McEstimate simulate_link_outage(const TrialConfig& cfg) {
    cfg.validate();
    ConnectionDraw conn = make_connection_draw(cfg);
    CaptureDraw capt = make_capture_draw(cfg);
    auto joint = [&](CounterRng& rng) { return conn(rng) && capt(rng); };
    return finish(run_trials(cfg, joint), cfg.trials, true);
}

}  // namespace loracap
