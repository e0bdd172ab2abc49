#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "loracap/capacity.hpp"
#include "loracap/schemes.hpp"

using namespace loracap;

namespace {

NetworkScenario default_scenario() {
    NetworkScenario s;
    s.finalize();
    return s;
}

}  // namespace

TEST_CASE("scheme inversion") {
    // RT(2): o^2 = 0.01 -> o = 0.1
    CHECK(invert_scheme(SchemeConfig::rt(2), 0.01) == doctest::Approx(0.1).epsilon(1e-9));
    CHECK(invert_scheme(SchemeConfig::dt(), 0.25) == doctest::Approx(0.25).epsilon(1e-10));

    // round trips through every closed form
    for (double target : {1e-4, 1e-3, 0.05, 0.4}) {
        for (SchemeConfig cfg : {SchemeConfig::rt(3), SchemeConfig::ct(2),
                                 SchemeConfig::ht(2, 1, 3)}) {
            double o = invert_scheme(cfg, target);
            CHECK(scheme_outage(cfg, o).final_outage == doctest::Approx(target).epsilon(1e-8));
        }
    }
    CHECK_THROWS_AS(invert_scheme(SchemeConfig::dt(), 0.0), std::domain_error);
    CHECK_THROWS_AS(invert_scheme(SchemeConfig::dt(), 1.0), std::domain_error);
}

TEST_CASE("device count at the border") {
    NetworkScenario s = default_scenario();
    CapacityResult dt = max_devices(s, 7, SchemeConfig::dt(), 0.99);
    CHECK(dt.reachable);
    CHECK(dt.required_link_outage == doctest::Approx(0.01).epsilon(1e-8));
    CHECK(dt.n_devices == doctest::Approx(90.2076).epsilon(1e-4));

    // replication buys capacity at every SF
    CapacityResult ht = max_devices(s, 7, SchemeConfig::ht(2, 1, 3), 0.99);
    CHECK(ht.n_devices > dt.n_devices);

    // the target can exceed what even an interference-free link delivers
    CapacityResult hard = max_devices(s, 12, SchemeConfig::dt(), 0.9999999);
    CHECK_FALSE(hard.reachable);
    CHECK(hard.n_devices == 0.0);
}

TEST_CASE("capacity ordering across schemes") {
    NetworkScenario s = default_scenario();
    for (double target : {0.99, 0.999}) {
        for (int sf : {7, 10, 12}) {
            double dt = optimize(s, sf, target, OptimizeKind::CT, 1).best.n_devices;
            double rt = optimize(s, sf, target, OptimizeKind::RT).best.n_devices;
            double ct = optimize(s, sf, target, OptimizeKind::CT).best.n_devices;
            double ht = optimize(s, sf, target, OptimizeKind::HT).best.n_devices;
            double hts = optimize(s, sf, target, OptimizeKind::HTStar).best.n_devices;
            CHECK(rt >= dt);
            CHECK(ct >= dt);
            CHECK(ht >= rt - 1e-9);
            CHECK(ht >= ct - 1e-9);
            CHECK(ht >= hts - 1e-9);
            CHECK(hts >= ct - 1e-9);
        }
    }
}

TEST_CASE("optimizer configuration choices") {
    NetworkScenario s = default_scenario();

    OptimizeResult rt99 = optimize(s, 7, 0.99, OptimizeKind::RT);
    CHECK(rt99.best.config.m == 7);
    bool six_flagged = false;
    for (const auto& t : rt99.near_ties) six_flagged = six_flagged || t.config.m == 6;
    CHECK(six_flagged);

    CHECK(optimize(s, 7, 0.99, OptimizeKind::CT).best.config.n == 2);
    CHECK(optimize(s, 7, 0.999, OptimizeKind::CT).best.config.n == 4);

    OptimizeResult ht99 = optimize(s, 7, 0.99, OptimizeKind::HT);
    CHECK(ht99.best.config.m == 2);
    CHECK(ht99.best.config.n == 1);
    CHECK(ht99.best.config.r == 3);

    OptimizeResult hts99 = optimize(s, 7, 0.99, OptimizeKind::HTStar);
    CHECK(hts99.best.config.m == 1);
    CHECK(hts99.best.config.n == 1);
    CHECK(hts99.best.config.r == 2);
    CHECK(hts99.best.config.copies() == 3);

    // the optimum configuration is independent of the traffic intensity
    // scale, so it repeats across SFs until the duty cycle bites
    OptimizeResult rt10 = optimize(s, 10, 0.99, OptimizeKind::RT);
    CHECK(rt10.best.config.m == rt99.best.config.m);

    // SF12 is capped at 6 copies by the 1% duty cycle
    CHECK(optimize(s, 12, 0.999, OptimizeKind::RT).best.config.m == 6);
}

TEST_CASE("near ties are reported sorted by capacity") {
    NetworkScenario s = default_scenario();
    OptimizeResult res = optimize(s, 7, 0.99, OptimizeKind::RT);
    for (std::size_t i = 0; i < res.near_ties.size(); ++i) {
        CHECK(res.near_ties[i].n_devices <=
              res.best.n_devices * (1.0 + 1e-12));
        if (i > 0)
            CHECK(res.near_ties[i].n_devices <= res.near_ties[i - 1].n_devices * (1.0 + 1e-12));
        CHECK(res.near_ties[i].n_devices >= res.best.n_devices * (1.0 - kNearTieFraction));
    }
}
