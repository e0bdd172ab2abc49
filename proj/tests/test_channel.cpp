#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "loracap/channel.hpp"
#include "loracap/verify.hpp"

using namespace loracap;

namespace {

NetworkScenario default_scenario() {
    NetworkScenario s;
    s.finalize();
    return s;
}

}  // namespace

TEST_CASE("path gain") {
    NetworkScenario s = default_scenario();
    CHECK(path_gain(s, s.ref_dist_m) == doctest::Approx(1.0 / s.ploss_ref_linear).epsilon(1e-12));
    // doubling the distance costs 2^eta in gain
    double ratio = path_gain(s, 30.0) / path_gain(s, 60.0);
    CHECK(ratio == doctest::Approx(std::pow(2.0, s.ploss_exponent)).epsilon(1e-12));
    CHECK_THROWS_AS(path_gain(s, 0.0), std::domain_error);
    CHECK_THROWS_AS(path_gain(s, -5.0), std::domain_error);
}

TEST_CASE("noise floor") {
    NetworkScenario s = default_scenario();
    CHECK(noise_power_dbm(s) == doctest::Approx(-117.0309).epsilon(1e-6));
}

TEST_CASE("connection probability at the border") {
    NetworkScenario s = default_scenario();
    // border mean SNR for SF7 is 33.4956 dB against a -6 dB threshold
    CHECK(connection_prob(s, 7, s.radius_m) == doctest::Approx(0.999887689441).epsilon(1e-9));
    // monotone in distance and in SF threshold
    CHECK(connection_prob(s, 7, 100.0) > connection_prob(s, 7, 200.0));
    CHECK(connection_prob(s, 12, s.radius_m) > connection_prob(s, 7, s.radius_m));
}

TEST_CASE("hypergeometric evaluator") {
    CHECK(hyp2f1_capture(3.51, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    // eta = 4, z = 1 is the classical 2F1(1, 1/2; 3/2; -1) = pi/4
    CHECK(std::abs(hyp2f1_capture(4.0, 1.0) - std::numbers::pi / 4.0) <= 1e-12);
    // the capture argument at the border of the default scenario
    CHECK(hyp2f1_capture(3.51, std::pow(10.0, -0.1)) ==
          doctest::Approx(0.80180721011213).epsilon(1e-12));

    // both series branches against quadrature
    for (double z : {1e-3, 0.1, 0.4, 0.5, 0.7, 2.0, 30.0, 500.0}) {
        for (double eta : {2.2, 3.51, 5.7}) {
            double f = hyp2f1_capture(eta, z);
            double q = verify::capture_integral_quadrature(eta, z);
            CHECK(std::abs(f - q) / q <= 1e-10);
        }
    }
}

TEST_CASE("capture probability") {
    NetworkScenario s = default_scenario();
    s.set_mean_nodes(7, 100.0);
    CHECK(capture_prob(s, 7, s.radius_m, 1) == doctest::Approx(0.989043631976).epsilon(1e-9));
    // more copies mean more interference
    CHECK(capture_prob(s, 7, s.radius_m, 4) < capture_prob(s, 7, s.radius_m, 1));
    // interior nodes capture more easily
    CHECK(capture_prob(s, 7, 50.0, 1) > capture_prob(s, 7, s.radius_m, 1));
    // empty network: no interferers at all
    NetworkScenario empty = default_scenario();
    CHECK(capture_prob(empty, 7, s.radius_m, 1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("link outage assembly") {
    NetworkScenario s = default_scenario();
    s.set_mean_nodes(7, 100.0);
    OutageBreakdown b = link_outage(s, 7, s.radius_m, 1);
    CHECK(b.link_outage == doctest::Approx(1.0 - b.h1 * b.q1).epsilon(1e-15));
    CHECK(b.link_outage == doctest::Approx(0.011067448).epsilon(1e-6));
    CHECK(b.sf == 7);
    CHECK(b.copies == 1);
}
