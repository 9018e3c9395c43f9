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

#include <string>
#include <vector>

#include "kposim/model.hpp"

namespace kposim {

/// Declarative run configuration. All frequencies are ordinary frequencies in
/// MHz (f = omega / 2 pi), times in us. Parsed from a flat TOML-style file of
/// `key = value` lines (strings, numbers, booleans, [arrays], # comments).
struct RunConfig {
    // physical parameters
    double delta_mhz = -30.0;
    double chi_mhz = 18.0;
    double beta_mhz = 42.0;
    double g_mhz = 5.0;
    double lambda_p_mhz = 0.5;
    double gamma1_mhz = 0.8;
    double gamma2_mhz = 0.8;
    double qubit_offset_mhz = 0.0;

    // numerics
    int fock_cutoff = 20;
    double t_final_us = 3.0;
    int jobs = 0;  // 0 -> logical core count

    // sweep grid + extremum detection
    double grid_min_mhz = -25.0;
    double grid_max_mhz = 25.0;
    double grid_step_mhz = 0.05;
    double prominence_main = 2e-4;   // principal dips/peak tier
    double prominence_small = 5e-5;  // strong-drive small-dip tier

    // scan specification
    std::string scan_mode = "fixed_beta";  // or "constrained"
    std::vector<double> scan_delta_mhz = {-34, -33, -32, -31, -30, -29, -28, -27, -26};
    double scan_constraint_mhz = 50.0;     // constrained mode: (2 beta + delta)/2pi
    double scan_window_half_mhz = 2.0;

    std::string out_dir = "out";

    void validate() const;             // throws ConfigError
    SystemParams system_params() const;

    /// Deterministic serialization; parse(serialize(c)) == c.
    std::string serialize() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace kposim
