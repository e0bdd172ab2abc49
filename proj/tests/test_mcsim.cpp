#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "loracap/channel.hpp"
#include "loracap/mcsim.hpp"

using namespace loracap;

namespace {

TrialConfig make_config(double nbar, double d1_frac, int copies, std::uint64_t trials) {
    TrialConfig cfg;
    cfg.scenario.finalize();
    cfg.scenario.set_mean_nodes(7, nbar);
    cfg.sf = 7;
    cfg.d1_m = d1_frac * cfg.scenario.radius_m;
    cfg.copies = copies;
    cfg.trials = trials;
    cfg.seed = 20240817;
    cfg.threads = 2;
    return cfg;
}

}  // namespace

TEST_CASE("trial config validation") {
    TrialConfig cfg = make_config(100.0, 1.0, 1, 1000);
    CHECK_NOTHROW(cfg.validate());
    cfg.trials = 0;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg = make_config(100.0, 1.0, 1, 1000);
    cfg.d1_m = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg = make_config(100.0, 1.0, 1, 1000);
    cfg.d1_m = 2.0 * cfg.scenario.radius_m;
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    cfg = make_config(100.0, 1.0, 0, 1000);
    CHECK_THROWS_AS(cfg.validate(), std::domain_error);
}

TEST_CASE("determinism across runs and threads") {
    TrialConfig cfg = make_config(200.0, 0.5, 2, 40000);
    McEstimate a = simulate_capture(cfg);
    McEstimate b = simulate_capture(cfg);
    CHECK(a.value == b.value);

    TrialConfig eight = cfg;
    eight.threads = 8;
    CHECK(simulate_capture(eight).value == a.value);
    CHECK(simulate_link_outage(eight).value == simulate_link_outage(cfg).value);

    TrialConfig reseeded = cfg;
    reseeded.seed += 1;
    CHECK(simulate_capture(reseeded).value != a.value);
}

TEST_CASE("capture estimate matches the analytic expression") {
    TrialConfig cfg = make_config(500.0, 1.0, 2, 200000);
    McEstimate est = simulate_capture(cfg);
    double analytic = capture_prob(cfg.scenario, cfg.sf, cfg.d1_m, cfg.copies);
    CHECK(std::abs(est.value - analytic) <= 4.0 * est.std_error);
}

TEST_CASE("connection estimate matches the analytic expression") {
    // border node on SF7: about one connection failure per 10^4 trials,
    // so half a million trials resolve the rate
    TrialConfig cfg = make_config(0.0, 1.0, 1, 500000);
    McEstimate est = simulate_connection(cfg);
    double analytic = connection_prob(cfg.scenario, cfg.sf, cfg.d1_m);
    CHECK(std::abs(est.value - analytic) <= 4.0 * std::max(est.std_error, 1e-9));
}

TEST_CASE("link outage estimate combines both effects") {
    TrialConfig cfg = make_config(1000.0, 1.0, 1, 200000);
    McEstimate est = simulate_link_outage(cfg);
    double analytic = link_outage(cfg.scenario, cfg.sf, cfg.d1_m, cfg.copies).link_outage;
    CHECK(std::abs(est.value - analytic) <= 4.0 * est.std_error);
    // with this density the outage is clearly nonzero
    CHECK(est.value > 0.01);
}
