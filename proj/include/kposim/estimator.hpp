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

#include <optional>

#include "kposim/spectroscopy.hpp"

namespace kposim {

struct EstimationReport {
    double dip_low_mhz = 0.0;
    double dip_high_mhz = 0.0;
    double splitting_mhz = 0.0;  // dip_high - dip_low > 0
    double peak_mhz = 0.0;       // most prominent peak, 0 if none
    double g_mhz = 0.0;
    double alpha_est_sq = 0.0;
    double alpha_ana_sq = 0.0;
    double alpha_true_sq = 0.0;
    double eps1 = 0.0;  // |alpha_est^2 - true| / true
    double eps2 = 0.0;  // |alpha_ana^2 - true| / true
};

/// alpha_est = (dip_high - dip_low) / (4 g), all inputs in MHz.
double estimate_alpha(double dip_low_mhz, double dip_high_mhz, double g_mhz);

/// Steady-state Tr[rho a^dag a] of the bare KPO (lambda_p = g = 0), the
/// reference photon number the spectroscopic estimate is judged against.
double true_photon_number(const SystemParams& p, const HilbertSpec& space);

/// |estimated - true| / true; throws DivisionByZeroPhotonNumber for true <= 0.
double relative_error(double estimated_sq, double true_sq);

/// Full report from a detected extrema list (uses the two most prominent dips).
EstimationReport make_report(const std::vector<ExtremumPoint>& extrema, const SystemParams& p,
                             const HilbertSpec& space);

struct BifurcationCheck {
    bool passed = false;
    bool above_threshold = false;  // 2 beta + delta > 0
    double best_alpha = 0.0;       // even-cat amplitude maximizing the overlap
    double best_overlap = 0.0;     // with the KPO-only ground state
};

/// True iff 2 beta + delta > 0 and the bare-KPO ground state (the top of the
/// rotating-frame spectrum) has > 0.9 overlap with the best-fit even cat.
BifurcationCheck bifurcation_check(const SystemParams& p, const HilbertSpec& space);

enum class ScanMode { FixedBeta, Constrained };

struct ScanOptions {
    double constraint_mhz = 50.0;    // constrained mode: 2 beta + delta (MHz)
    double window_half_mhz = 2.0;    // half-width of each dip search window
    double step_mhz = 0.05;
    double min_prominence = 1e-4;
    SweepOptions sweep;
};

struct ScanRow {
    double delta_mhz = 0.0;
    double beta_mhz = 0.0;
    double alpha_true_sq = 0.0;
    double alpha_est_sq = 0.0;
    double alpha_ana_sq = 0.0;
    double eps1 = 0.0;
    double eps2 = 0.0;
    int n_dips = 0;
    bool skipped = false;  // bifurcation_check failed; remaining fields zero
};

/// One estimation pipeline run per detuning value. Instead of a full-range
/// sweep, each row probes two narrow windows centered on the predicted dip
/// positions +/- 2 g alpha_true (identical estimates, far fewer trajectories).
std::vector<ScanRow> scan_detuning(const SystemParams& base, const HilbertSpec& space,
                                   const std::vector<double>& delta_values_mhz, ScanMode mode,
                                   const ScanOptions& options = {});

}  // namespace kposim
