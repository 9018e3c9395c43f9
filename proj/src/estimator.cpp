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

#include "kposim/estimator.hpp"

#include <algorithm>
#include <cmath>

namespace kposim {

double estimate_alpha(double dip_low_mhz, double dip_high_mhz, double g_mhz) {
    if (dip_high_mhz <= dip_low_mhz) throw InvalidSplitting("dip_high must exceed dip_low");
    if (g_mhz <= 0) throw InvalidSplitting("g must be > 0");
    return (dip_high_mhz - dip_low_mhz) / (4.0 * g_mhz);
}

namespace {

/// Bare-KPO Hamiltonian (no qubit factor), rad/us.
Operator kpo_only_hamiltonian(const SystemParams& p, const HilbertSpec& space) {
    const Matrix a = annihilation(space).mat;
    const Matrix ad = a.adjoint();
    Matrix h = p.delta * (ad * a) - 0.5 * p.chi * (ad * ad * a * a) + p.beta * (a * a + ad * ad);
    return {std::move(h), "H_KPO_only"};
}

}  // namespace

double true_photon_number(const SystemParams& p, const HilbertSpec& space) {
    if (p.gamma1 <= 0) throw DegenerateSteadyState("true_photon_number requires gamma1 > 0");
    const Operator h = kpo_only_hamiltonian(p, space);
    const auto ss = steady_state(liouvillian(h, {{annihilation(space), p.gamma1}}));
    return (number_op(space).mat * ss.rho.mat).trace().real();
}

double relative_error(double estimated_sq, double true_sq) {
    if (true_sq <= 0) throw DivisionByZeroPhotonNumber("true photon number must be > 0");
    return std::abs(estimated_sq - true_sq) / true_sq;
}

EstimationReport make_report(const std::vector<ExtremumPoint>& extrema, const SystemParams& p,
                             const HilbertSpec& space) {
    const auto dips = principal_dips(extrema, 2);
    if (dips.size() < 2) throw NoExtrema("estimation needs two dips, found " + std::to_string(dips.size()));

    EstimationReport r;
    r.dip_low_mhz = dips[0].freq_mhz;
    r.dip_high_mhz = dips[1].freq_mhz;
    r.splitting_mhz = r.dip_high_mhz - r.dip_low_mhz;
    r.g_mhz = p.g / kTwoPi;
    const ExtremumPoint* best_peak = nullptr;
    for (const auto& e : extrema)
        if (e.kind == ExtremumKind::Peak && (!best_peak || e.prominence > best_peak->prominence))
            best_peak = &e;
    if (best_peak) r.peak_mhz = best_peak->freq_mhz;

    const double a_est = estimate_alpha(r.dip_low_mhz, r.dip_high_mhz, r.g_mhz);
    r.alpha_est_sq = a_est * a_est;
    const double a_ana = semiclassical_alpha(p);
    r.alpha_ana_sq = a_ana * a_ana;
    r.alpha_true_sq = true_photon_number(p, space);
    r.eps1 = relative_error(r.alpha_est_sq, r.alpha_true_sq);
    r.eps2 = relative_error(r.alpha_ana_sq, r.alpha_true_sq);
    return r;
}

BifurcationCheck bifurcation_check(const SystemParams& p, const HilbertSpec& space) {
    BifurcationCheck result;
    result.above_threshold = (2.0 * p.beta + p.delta) > 0;

    Eigen::SelfAdjointEigenSolver<Matrix> es(kpo_only_hamiltonian(p, space).mat);
    // rotating-frame ground state = top of the spectrum (descending convention)
    const Vector ground = es.eigenvectors().col(space.fock_cutoff - 1);

    // best-fit even cat: coarse scan then golden-section polish
    auto overlap = [&](double alpha) {
        if (alpha <= 0) return std::norm(ground.dot(fock_state(0, space).amp));
        const Ket cat = cat_state(alpha, CatParity::Even, space);
        return std::norm(cat.amp.dot(ground));
    };
    // stay inside the truncation-safe domain |alpha|^2 <= N/4
    const double alpha_max = std::sqrt(space.fock_cutoff / 4.0);
    double best_a = 0.0, best_ov = overlap(0.0);
    for (double a = 0.05; a <= alpha_max; a += 0.05) {
        const double ov = overlap(a);
        if (ov > best_ov) {
            best_ov = ov;
            best_a = a;
        }
    }
    double lo = std::max(0.0, best_a - 0.05), hi = best_a + 0.05;
    for (int it = 0; it < 40; ++it) {
        const double m1 = lo + 0.381966 * (hi - lo);
        const double m2 = hi - 0.381966 * (hi - lo);
        if (overlap(m1) < overlap(m2))
            lo = m1;
        else
            hi = m2;
    }
    best_a = 0.5 * (lo + hi);
    best_ov = overlap(best_a);

    result.best_alpha = best_a;
    result.best_overlap = best_ov;
    result.passed = result.above_threshold && best_ov > 0.9;
    return result;
}

std::vector<ScanRow> scan_detuning(const SystemParams& base, const HilbertSpec& space,
                                   const std::vector<double>& delta_values_mhz, ScanMode mode,
                                   const ScanOptions& options) {
    if (delta_values_mhz.empty()) throw Error("scan_detuning: empty detuning list");
    std::vector<ScanRow> rows;
    rows.reserve(delta_values_mhz.size());

    for (double delta_mhz : delta_values_mhz) {
        SystemParams p = base;
        p.delta = kTwoPi * delta_mhz;
        if (mode == ScanMode::Constrained) p.beta = 0.5 * kTwoPi * (options.constraint_mhz - delta_mhz);

        ScanRow row;
        row.delta_mhz = delta_mhz;
        row.beta_mhz = p.beta / kTwoPi;

        if (!bifurcation_check(p, space).passed) {
            row.skipped = true;
            rows.push_back(row);
            continue;
        }

        row.alpha_true_sq = true_photon_number(p, space);
        const double a_ana = semiclassical_alpha(p);
        row.alpha_ana_sq = a_ana * a_ana;

        // probe two windows around the predicted dips at -/+ 2 g alpha_true
        const double center = 2.0 * (p.g / kTwoPi) * std::sqrt(row.alpha_true_sq);
        const double w = options.window_half_mhz;
        GridSpec lo{-center - w, -center + w, options.step_mhz};
        GridSpec hi{center - w, center + w, options.step_mhz};
        SweepResult s_lo = sweep(p, space, lo, options.sweep);
        SweepResult s_hi = sweep(p, space, hi, options.sweep);

        auto deepest_dip = [&](const SweepResult& s) -> ExtremumPoint {
            auto dips = principal_dips(find_extrema(s, options.min_prominence), 1);
            if (dips.empty()) throw NoExtrema("no dip in scan window");
            return dips[0];
        };
        try {
            const ExtremumPoint d_lo = deepest_dip(s_lo);
            const ExtremumPoint d_hi = deepest_dip(s_hi);
            row.n_dips = 2;
            const double a_est = estimate_alpha(d_lo.freq_mhz, d_hi.freq_mhz, p.g / kTwoPi);
            row.alpha_est_sq = a_est * a_est;
            row.eps1 = relative_error(row.alpha_est_sq, row.alpha_true_sq);
            row.eps2 = relative_error(row.alpha_ana_sq, row.alpha_true_sq);
        } catch (const NoExtrema&) {
            row.skipped = true;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace kposim
