#include <doctest.h>

#include <stdexcept>

#include "loracap/report.hpp"

using namespace loracap;

TEST_CASE("number formatting is stable") {
    CHECK(format_number(0.25) == "0.25");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1e-9) == "1e-09");
    // two runs over the same value are byte-identical by construction
    CHECK(format_number(0.007122745970264077) == format_number(0.007122745970264077));
}

TEST_CASE("csv writer") {
    CsvWriter csv({"a", "b"});
    csv.add_row({"1", "2"});
    csv.add_row({"x", "y"});
    CHECK(csv.str() == "a,b\n1,2\nx,y\n");
    CHECK_THROWS_AS(csv.add_row({"only-one"}), std::invalid_argument);
}

TEST_CASE("manifest round trip") {
    RunManifest m;
    m.command = "simulate";
    m.scenario_path = "scenario.json";
    m.params = {{"sf", "7"}, {"trials", "1000"}};
    m.seed = 987654321;
    m.threads = 4;
    m.outputs = {"simulate.json"};

    RunManifest back = RunManifest::from_json(m.to_json());
    CHECK(back.command == m.command);
    CHECK(back.scenario_path == m.scenario_path);
    CHECK(back.params == m.params);
    CHECK(back.seed == m.seed);
    CHECK(back.threads == m.threads);
    CHECK(back.version == kToolVersion);
    CHECK(back.outputs == m.outputs);

    // serialization itself is deterministic
    CHECK(m.to_json() == back.to_json());
}
