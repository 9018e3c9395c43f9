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

#include "kposim/model.hpp"

namespace kposim {

/// Effective two-level drive Hamiltonian in the interaction picture of the
/// rotated frame (Z = sigma_x of the original basis), with the overall
/// lambda_p factored out:
///   H_I(t) = (1/2) [ Z e^{-i dq t} + s+ e^{ i(2ga - dq) t} - s- e^{-i(2ga + dq) t}
///                  + Z e^{+i dq t} - s+ e^{ i(2ga + dq) t} + s- e^{ i(-2ga + dq) t} ].
/// Arguments in rad/us; returns a 2x2 Hermitian operator (dimensionless).
Operator interaction_hamiltonian(double t_us, double g, double alpha, double delta_q);

/// First- and second-order transition amplitudes
///   C1 = lambda_p <psi_f| D1 |psi_0>,  C2 = lambda_p^2 <psi_f| D2 |psi_0>,
/// with D1 = -i Int_0^t H_I and D2 = - Int_0^t Int_0^t1 H_I(t1) H_I(t2),
/// evaluated in closed form (termwise integration of the exponential sums,
/// with series branches for small phases). Angular frequencies in rad/us.
std::pair<Complex, Complex> perturbative_amplitudes(const Ket& psi0, const Ket& psif, double t_us,
                                                    double lambda_p, double g, double alpha,
                                                    double delta_q);

struct Resonance {
    double freq_mhz = 0.0;
    int order = 1;        // 1 or 2
    std::string origin;   // "dq=0", "+2ga", "-2ga", "+ga", "-ga"
};

/// Predicted resonance set {0, +/-2 g alpha (order 1), +/- g alpha (order 2)}.
/// g in MHz, alpha dimensionless; frequencies returned in MHz, sorted.
std::vector<Resonance> resonance_frequencies(double g_mhz, double alpha);

}  // namespace kposim
