#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "loracap/oracle.hpp"
#include "loracap/schemes.hpp"

using namespace loracap;
using namespace loracap::oracle;

TEST_CASE("chain walk semantics") {
    EventWindow::Chain c;
    c.coded = {true, false, false};
    c.uncoded = {true, false, false};
    CHECK(chain_succeeds(c));  // first hop reachable and available

    c.uncoded = {false, true, false};
    CHECK_FALSE(chain_succeeds(c));  // second link is down, walk dies there

    c.coded = {true, true, false};
    CHECK(chain_succeeds(c));  // reaches depth 2 where the message is there

    c.coded = {true, true, true};
    c.uncoded = {false, false, false};
    CHECK_FALSE(chain_succeeds(c));  // all links fine but nothing to fetch
}

TEST_CASE("exact enumeration degenerate cases") {
    CHECK(oracle_outage_exact(0.37, 3, 0, 2) == doctest::Approx(0.37 * 0.37 * 0.37).epsilon(1e-15));
    CHECK(oracle_outage_exact(0.0, 2, 1, 1) == 0.0);
    CHECK(oracle_outage_exact(1.0, 2, 1, 1) == 1.0);
    CHECK_THROWS_AS(oracle_outage_exact(0.5, 1, 4, 1), std::domain_error);
    CHECK_THROWS_AS(oracle_outage_exact(-0.1, 1, 1, 1), std::domain_error);
}

TEST_CASE("exact enumeration regression value") {
    // (o, m, n, r) = (1/2, 2, 1, 3): every group outcome is dyadic, so the
    // enumeration is exact -- 30591961 / 2^32
    CHECK(oracle_outage_exact(0.5, 2, 1, 3) ==
          doctest::Approx(0.007122745970264077).epsilon(1e-14));
}

TEST_CASE("enumeration matches the closed form") {
    for (int m = 1; m <= 2; ++m)
        for (int r = 1; r <= 2; ++r)
            for (int n = 1; n <= 2; ++n)
                for (double o : {0.2, 0.5, 0.8}) {
                    double exact = oracle_outage_exact(o, m, n, r);
                    double closed = outage_ht(o, m, n, r);
                    CHECK(std::abs(exact - closed) <= 1e-12);
                }
    // the n = 3 route goes through the per-chain enumeration
    CHECK(std::abs(oracle_outage_exact(0.6, 2, 3, 1) - outage_ht(0.6, 2, 3, 1)) <= 1e-12);
}

TEST_CASE("monte carlo oracle") {
    double exact = oracle_outage_exact(0.5, 2, 1, 3);
    McEstimate est = oracle_outage_mc(0.5, 2, 1, 3, 400000, 42, 2);
    CHECK(est.trials == 400000);
    CHECK(std::abs(est.value - exact) <= 4.0 * est.std_error);

    // partitioning must not affect the result
    McEstimate one = oracle_outage_mc(0.3, 1, 2, 2, 50000, 7, 1);
    McEstimate four = oracle_outage_mc(0.3, 1, 2, 2, 50000, 7, 4);
    CHECK(one.value == four.value);

    // different seeds actually change the draw
    McEstimate other = oracle_outage_mc(0.3, 1, 2, 2, 50000, 8, 1);
    CHECK(one.value != other.value);
}

TEST_CASE("peeling decoder bound") {
    // no coded groups: peeling degenerates to the plain uncoded outage
    CHECK(peeling_outage_exact(0.45, 2, 0, 1) == doctest::Approx(0.45 * 0.45).epsilon(1e-15));

    // the windowed decoder sees strictly more redundancy than the chain
    // count, so it never reports more outages
    for (int m = 1; m <= 2; ++m)
        for (int r = 1; r <= 2; ++r)
            for (int n = 1; n <= 2; ++n)
                for (double o : {0.2, 0.5, 0.8}) {
                    double peel = peeling_outage_exact(o, m, n, r);
                    CHECK(peel <= outage_ht(o, m, n, r) + 1e-12);
                    CHECK(peel >= 0.0);
                }
    CHECK_THROWS_AS(peeling_outage_exact(0.5, 1, 3, 1), std::domain_error);
}

TEST_CASE("peeling monte carlo tracks the exact count") {
    double exact = peeling_outage_exact(0.5, 1, 1, 1);
    McEstimate est = peeling_outage_mc(0.5, 1, 1, 1, 200000, 11);
    CHECK(std::abs(est.value - exact) <= 4.0 * est.std_error);
}
