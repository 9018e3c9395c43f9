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

#include "kposim/estimator.hpp"

using namespace kposim;

namespace {
SystemParams fig2_params() {
    return SystemParams::from_mhz(-30.0, 18.0, 42.0, 5.0, 0.5, 0.0, 0.8, 0.8);
}
}  // namespace

TEST_CASE("estimate_alpha") {
    const double a = estimate_alpha(-16.80, 17.10, 5.0);
    CHECK(a == doctest::Approx(1.695).epsilon(1e-12));
    CHECK(a * a == doctest::Approx(2.873).epsilon(1e-3));

    CHECK(estimate_alpha(-10.0, 10.0, 5.0) == doctest::Approx(1.0));  // (-2g, +2g)

    // depends only on the splitting
    CHECK(estimate_alpha(-16.80 + 3.0, 17.10 + 3.0, 5.0) == doctest::Approx(a));
    // linear in the splitting
    CHECK(estimate_alpha(-33.60, 34.20, 5.0) == doctest::Approx(2.0 * a));

    CHECK_THROWS_AS(estimate_alpha(2.0, 1.0, 5.0), InvalidSplitting);
    CHECK_THROWS_AS(estimate_alpha(-1.0, 1.0, 0.0), InvalidSplitting);
}

TEST_CASE("relative_error") {
    CHECK(relative_error(2.87, 2.810968) == doctest::Approx(0.021).epsilon(0.05));
    CHECK(relative_error(3.00, 2.810968) == doctest::Approx(0.0672).epsilon(0.01));
    CHECK(relative_error(1.5, 1.5) == doctest::Approx(0.0));
    // scale invariance
    CHECK(relative_error(2.0 * 2.87, 2.0 * 2.81) == doctest::Approx(relative_error(2.87, 2.81)));
    CHECK_THROWS_AS(relative_error(1.0, 0.0), DivisionByZeroPhotonNumber);
}

TEST_CASE("true photon number (frozen oracle values)") {
    SystemParams p = fig2_params();
    CHECK(true_photon_number(p, HilbertSpec(12)) == doctest::Approx(2.787280).epsilon(2e-5));
    CHECK(true_photon_number(p, HilbertSpec(15)) == doctest::Approx(2.810314).epsilon(2e-5));

    SUBCASE("vacuum below threshold") {
        p.beta = 0.0;
        CHECK(true_photon_number(p, HilbertSpec(8)) == doctest::Approx(0.0).epsilon(1e-6));
    }
    SUBCASE("independent of the drive, coupling, and qubit inputs") {
        SystemParams q = p.with_lambda_p(kTwoPi * 7.0).with_delta_q(kTwoPi * 3.0);
        q.g = kTwoPi * 2.0;
        q.gamma2 = kTwoPi * 0.1;
        CHECK(true_photon_number(q, HilbertSpec(12)) ==
              doctest::Approx(true_photon_number(p, HilbertSpec(12))).epsilon(1e-12));
    }
    SUBCASE("monotone in beta near the operating point") {
        SystemParams hi = p;
        hi.beta = kTwoPi * 46.0;
        CHECK(true_photon_number(hi, HilbertSpec(15)) > true_photon_number(p, HilbertSpec(15)));
    }
}

TEST_CASE("bifurcation check") {
    SUBCASE("operating point bifurcates") {
        const auto b = bifurcation_check(fig2_params(), HilbertSpec(15));
        CHECK(b.passed);
        CHECK(b.above_threshold);
        CHECK(b.best_overlap > 0.9);
        CHECK(b.best_alpha == doctest::Approx(std::sqrt(2.81)).epsilon(0.1));
    }
    SUBCASE("no parametric drive") {
        SystemParams p = fig2_params();
        p.beta = 0.0;
        CHECK_FALSE(bifurcation_check(p, HilbertSpec(15)).passed);
    }
    SUBCASE("slightly below threshold") {
        SystemParams p = fig2_params();
        p.beta = 0.5 * (-p.delta) - kTwoPi * 0.1;  // 2 beta + delta < 0
        const auto b = bifurcation_check(p, HilbertSpec(15));
        CHECK_FALSE(b.above_threshold);
        CHECK_FALSE(b.passed);
    }
}

TEST_CASE("scan_detuning validation") {
    CHECK_THROWS_AS(scan_detuning(fig2_params(), HilbertSpec(8), {}, ScanMode::FixedBeta), Error);
}

TEST_CASE("constrained mode fixes the semiclassical estimate") {
    // beta = (50 - delta)/2 makes alpha_ana^2 = 50/chi for every row
    for (double delta : {-34.0, -30.0, -26.0}) {
        SystemParams p = fig2_params();
        p.delta = kTwoPi * delta;
        p.beta = 0.5 * kTwoPi * (50.0 - delta);
        CHECK(std::pow(semiclassical_alpha(p), 2) == doctest::Approx(50.0 / 18.0).epsilon(1e-12));
    }
}
