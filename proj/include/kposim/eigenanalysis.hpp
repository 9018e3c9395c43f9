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

/// Eigendecomposition of the static coupled Hamiltonian. Levels are indexed in
/// DESCENDING eigenvalue order: in the rotating frame the bifurcated cat
/// manifold sits at the top of the spectrum, so index 0 is the physical ground
/// state of the undriven lab-frame ladder ("ground", "first excited", ...).
struct SpectrumTable {
    std::vector<double> eigenvalues_mhz;  // descending, units MHz (omega / 2 pi)
    std::vector<Ket> eigenvectors;        // orthonormal, matching order
    std::vector<std::string> labels;      // best-match ansatz, filled by label_spectrum
    std::vector<double> overlaps;         // |<ansatz|v>|^2, matching labels
};

SpectrumTable spectrum(const SystemParams& p, const HilbertSpec& space);

struct Transition {
    int i = 0;
    int j = 0;            // i < j
    double gap_mhz = 0.0; // E_i - E_j >= 0 in the descending-level convention
};

/// All pairwise level gaps with i < j <= max_level, sorted by gap.
std::vector<Transition> transition_table(const SpectrumTable& s, int max_level);

struct StateMatch {
    std::string label;
    double overlap = 0.0;
};

/// Best match of v against displaced-Fock cat ansatz states
///   (D_{+alpha}|n> (x) |q1>  +/-  D_{-alpha}|n> (x) |q2>) / norm,
/// n in 0..3, q1, q2 in {|+>, |->} (sigma_x eigenstates). The set includes the
/// product forms (q1 = q2) and the entangled forms (q1 != q2) that the exact
/// eigenvectors actually favor.
StateMatch identify_state(const Ket& v, double alpha, const HilbertSpec& space);

/// Fill labels/overlaps of every level of s using identify_state.
void label_spectrum(SpectrumTable& s, double alpha, const HilbertSpec& space);

/// Populations p_k(t) = <v_k| rho(t) |v_k> at each stored snapshot.
/// Result: one row per snapshot time, one column per requested level.
struct PopulationSeries {
    std::vector<double> times_us;
    std::vector<std::vector<double>> populations;  // [time][level]
};

PopulationSeries eigen_populations(const Trajectory& traj, const SpectrumTable& s,
                                   const std::vector<int>& levels);

}  // namespace kposim
