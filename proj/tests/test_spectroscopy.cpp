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

#include <cmath>

#include "kposim/spectroscopy.hpp"

using namespace kposim;

namespace {

SweepResult synthetic(std::vector<double> x, std::vector<double> y) {
    SweepResult s;
    s.grid_mhz = std::move(x);
    s.signal = std::move(y);
    s.trace_err.assign(s.grid_mhz.size(), 0.0);
    return s;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

}  // namespace

TEST_CASE("GridSpec points") {
    GridSpec g{-1.0, 1.0, 0.5};
    const auto pts = g.points();
    REQUIRE(pts.size() == 5);
    CHECK(pts.front() == doctest::Approx(-1.0));
    CHECK(pts.back() == doctest::Approx(1.0));
    CHECK_THROWS_AS((GridSpec{0, 1, 0.0}.points()), Error);
    CHECK_THROWS_AS((GridSpec{1, 0, 0.1}.points()), Error);
    // the paper grid is exactly 1001 points
    CHECK(GridSpec{-25.0, 25.0, 0.05}.points().size() == 1001);
}

TEST_CASE("find_extrema: single dip of a V-shaped signal") {
    const auto x = linspace(-2, 2, 41);
    std::vector<double> y;
    for (double xi : x) y.push_back(std::abs(xi - 0.3));
    const auto ex = find_extrema(synthetic(x, y), 0.01);
    REQUIRE(ex.size() == 1);
    CHECK(ex[0].kind == ExtremumKind::Dip);
    CHECK(ex[0].freq_mhz == doctest::Approx(0.3).epsilon(0.05));
}

TEST_CASE("find_extrema: monotone signal has none") {
    const auto x = linspace(0, 1, 11);
    std::vector<double> y;
    for (double xi : x) y.push_back(2.0 * xi);
    CHECK_THROWS_AS(find_extrema(synthetic(x, y), 0.01), NoExtrema);
}

TEST_CASE("find_extrema: prominence filter and refinement accuracy") {
    const auto x = linspace(-4, 4, 161);  // step 0.05
    std::vector<double> y;
    for (double xi : x) {
        // deep dip at -1.23, shallow ripple at +2
        y.push_back(0.5 - 0.4 * std::exp(-8.0 * (xi + 1.23) * (xi + 1.23)) -
                    0.005 * std::exp(-8.0 * (xi - 2.0) * (xi - 2.0)));
    }
    const auto strict = find_extrema(synthetic(x, y), 0.05);
    REQUIRE(strict.size() == 1);
    CHECK(strict[0].freq_mhz == doctest::Approx(-1.23).epsilon(1e-3));
    // refinement never moves the vertex more than one grid step
    CHECK(std::abs(strict[0].freq_mhz - (-1.25)) <= 0.05 + 1e-12);

    // the loose tier also admits the interior peak between the two dips
    const auto loose = find_extrema(synthetic(x, y), 0.002);
    int n_dips = 0;
    for (const auto& e : loose)
        if (e.kind == ExtremumKind::Dip) ++n_dips;
    CHECK(n_dips == 2);
}

TEST_CASE("find_extrema input validation") {
    const auto x = linspace(0, 1, 4);
    CHECK_THROWS_AS(find_extrema(synthetic(x, {0, 1, 0, 1}), 0.1), Error);
}

TEST_CASE("principal_dips picks the most prominent, frequency-ordered") {
    std::vector<ExtremumPoint> ex = {
        {-3.0, 0.4, ExtremumKind::Dip, 0.1},
        {-1.0, 0.2, ExtremumKind::Dip, 0.3},
        {0.5, 0.9, ExtremumKind::Peak, 0.5},
        {2.0, 0.3, ExtremumKind::Dip, 0.2},
    };
    const auto dips = principal_dips(ex, 2);
    REQUIRE(dips.size() == 2);
    CHECK(dips[0].freq_mhz == doctest::Approx(-1.0));
    CHECK(dips[1].freq_mhz == doctest::Approx(2.0));
}

TEST_CASE("sweep of a bare driven qubit peaks at zero detuning") {
    HilbertSpec space(2);
    SystemParams p{};
    p.chi = kTwoPi;
    p.g = 0.0;
    p.lambda_p = kTwoPi * 0.5;
    p.gamma1 = kTwoPi * 0.4;
    p.gamma2 = kTwoPi * 0.4;

    SweepOptions o;
    o.t_final_us = 1.0;
    o.jobs = 1;
    const SweepResult s = sweep(p, space, {-4.0, 4.0, 0.5}, o);
    REQUIRE(s.grid_mhz.size() == 17);
    for (double v : s.signal) {
        CHECK(v >= -1e-9);
        CHECK(v <= 1.0 + 1e-9);
    }
    const auto ex = find_extrema(s, 1e-3);
    REQUIRE(ex.size() == 1);
    CHECK(ex[0].kind == ExtremumKind::Peak);
    CHECK(ex[0].freq_mhz == doctest::Approx(0.0).epsilon(0.1));

    SUBCASE("parallel execution is bit-identical") {
        SweepOptions o2 = o;
        o2.jobs = 3;
        const SweepResult s2 = sweep(p, space, {-4.0, 4.0, 0.5}, o2);
        for (size_t i = 0; i < s.signal.size(); ++i) CHECK(s.signal[i] == s2.signal[i]);
    }
}

TEST_CASE("sweep rejects invalid input") {
    HilbertSpec space(2);
    SystemParams p{};
    p.chi = kTwoPi;
    CHECK_THROWS_AS(sweep(p, space, {-1, 1, 0.5}, {}), Error);  // lambda_p = 0
    p.lambda_p = kTwoPi * 0.5;
    p.gamma1 = p.gamma2 = kTwoPi * 0.4;
    CHECK_THROWS_AS(sweep_points(p, space, {0.0, 0.0}, {}), Error);  // not increasing
}
