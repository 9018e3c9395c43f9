// Copyright 2026 The kposim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "kposim/config.hpp"

using namespace kposim;

TEST_CASE("defaults parse from an empty document") {
    const RunConfig c = parse_config("");
    CHECK(c.delta_mhz == doctest::Approx(-30.0));
    CHECK(c.chi_mhz == doctest::Approx(18.0));
    CHECK(c.fock_cutoff == 20);
    CHECK(c.grid_step_mhz == doctest::Approx(0.05));
}

TEST_CASE("key parsing, comments, and sections") {
    const RunConfig c = parse_config(
        "# a comment\n"
        "[system]\n"
        "delta_mhz = -32.5   # inline comment\n"
        "beta_mhz = 43\n"
        "scan_mode = \"constrained\"\n"
        "scan_delta_mhz = [-31, -30, -29]\n"
        "out_dir = \"results\"\n");
    CHECK(c.delta_mhz == doctest::Approx(-32.5));
    CHECK(c.beta_mhz == doctest::Approx(43.0));
    CHECK(c.scan_mode == "constrained");
    REQUIRE(c.scan_delta_mhz.size() == 3);
    CHECK(c.scan_delta_mhz[1] == doctest::Approx(-30.0));
    CHECK(c.out_dir == "results");
}

TEST_CASE("round trip is the identity") {
    RunConfig c = parse_config("delta_mhz = -31.25\nlambda_p_mhz = 2\nscan_delta_mhz = [-31.5, -30]\n");
    const RunConfig c2 = parse_config(c.serialize());
    CHECK(c2.serialize() == c.serialize());
    CHECK(c2.delta_mhz == c.delta_mhz);
    CHECK(c2.lambda_p_mhz == c.lambda_p_mhz);
    CHECK(c2.scan_delta_mhz == c.scan_delta_mhz);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_config("unknown_key = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("delta_mhz = -30\ndelta_mhz = -31\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("delta_mhz = notanumber\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("delta_mhz\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("scan_mode = unquoted\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("scan_delta_mhz = 3\n"), ConfigError);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(parse_config("grid_step_mhz = 0\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("grid_step_mhz = -0.05\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("chi_mhz = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("gamma1_mhz = -0.1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("fock_cutoff = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("scan_mode = \"bogus\"\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("scan_delta_mhz = []\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("grid_min_mhz = 5\ngrid_max_mhz = -5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("t_final_us = 0\n"), ConfigError);
}

TEST_CASE("system parameter conversion") {
    const RunConfig c = parse_config("");
    const SystemParams p = c.system_params();
    CHECK(p.delta == doctest::Approx(kTwoPi * -30.0));
    CHECK(p.chi == doctest::Approx(kTwoPi * 18.0));
    CHECK(p.lambda_p == doctest::Approx(kTwoPi * 0.5));
    CHECK(p.delta_q == doctest::Approx(0.0));
}

TEST_CASE("load_config missing file") {
    CHECK_THROWS_AS(load_config("/nonexistent/path.toml"), ConfigError);
}
