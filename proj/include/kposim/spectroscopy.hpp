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

#pragma once

#include "kposim/dynamics.hpp"

namespace kposim {

struct GridSpec {
    double min_mhz = -25.0;
    double max_mhz = 25.0;
    double step_mhz = 0.05;

    std::vector<double> points() const;  // strictly increasing, inclusive of max
};

struct SweepOptions {
    double t_final_us = 3.0;
    int jobs = 0;  // 0 -> hardware_concurrency
    IntegratorControls controls;
};

struct SweepResult {
    std::vector<double> grid_mhz;    // strictly increasing
    std::vector<double> signal;      // I(delta_q) in [0, 1]
    std::vector<double> trace_err;   // max |Tr rho - 1| per trajectory
    SystemParams params;
    double t_final_us = 3.0;
};

/// Time-integrated excitation I(delta_q) over the given detuning grid.
/// The lambda_p = 0 steady state is computed once and reused for every point;
/// grid points are independent and evaluated by a worker pool.
SweepResult sweep(const SystemParams& p, const HilbertSpec& space, const GridSpec& grid,
                  const SweepOptions& options = {});

/// Same signal on an explicit (strictly increasing) list of detunings (MHz).
SweepResult sweep_points(const SystemParams& p, const HilbertSpec& space,
                         const std::vector<double>& grid_mhz, const SweepOptions& options = {});

enum class ExtremumKind { Peak, Dip };

struct ExtremumPoint {
    double freq_mhz = 0.0;    // quadratically refined vertex
    double value = 0.0;       // refined signal value
    ExtremumKind kind = ExtremumKind::Dip;
    double prominence = 0.0;  // topographic, > 0
};

/// Local minima/maxima by 3-point comparison, filtered by topographic
/// prominence, refined by a parabola through the three neighboring samples.
/// Sorted by frequency. Throws NoExtrema when nothing passes the filter.
std::vector<ExtremumPoint> find_extrema(const SweepResult& s, double min_prominence);

/// The `count` most prominent dips of a detected extrema list, frequency-sorted.
std::vector<ExtremumPoint> principal_dips(const std::vector<ExtremumPoint>& extrema, int count = 2);

}  // namespace kposim
