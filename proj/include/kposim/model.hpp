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

#include "kposim/fockspace.hpp"

namespace kposim {

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Physical parameters of the KPO + ancilla model. All members are angular
/// frequencies in rad/us; use from_mhz to enter ordinary frequencies (MHz).
struct SystemParams {
    double delta = 0.0;         // KPO detuning
    double chi = 0.0;           // Kerr coefficient, > 0
    double beta = 0.0;          // parametric drive amplitude
    double g = 0.0;             // KPO-qubit coupling
    double lambda_p = 0.0;      // qubit Rabi drive amplitude
    double delta_q = 0.0;       // qubit drive detuning
    double qubit_offset = 0.0;  // omega_g - omega_p/2
    double gamma1 = 0.0;        // KPO one-photon loss rate
    double gamma2 = 0.0;        // qubit spontaneous emission rate

    /// Construct from ordinary frequencies f = omega/2pi in MHz (times in us).
    static SystemParams from_mhz(double delta_mhz, double chi_mhz, double beta_mhz, double g_mhz,
                                 double lambda_p_mhz, double delta_q_mhz, double gamma1_mhz,
                                 double gamma2_mhz, double qubit_offset_mhz = 0.0);

    void validate() const;  // throws Error on invalid; warns on delta >= 0

    SystemParams with_delta_q(double delta_q_rad_us) const {
        SystemParams p = *this;
        p.delta_q = delta_q_rad_us;
        return p;
    }
    SystemParams with_lambda_p(double lambda_p_rad_us) const {
        SystemParams p = *this;
        p.lambda_p = lambda_p_rad_us;
        return p;
    }
};

// Hamiltonian builders on the composite KPO (x) qubit space (units rad/us).
Operator build_h_kpo(const SystemParams& p, const HilbertSpec& space);
Operator build_h_qubit(const SystemParams& p, const HilbertSpec& space);
Operator build_h_int(const SystemParams& p, const HilbertSpec& space);
Operator build_h_drive(const SystemParams& p, const HilbertSpec& space, double t_us);
Operator build_total(const SystemParams& p, const HilbertSpec& space, double t_us);
/// Static part H_KPO + H_G + H_I (everything except the qubit drive).
Operator build_static(const SystemParams& p, const HilbertSpec& space);

/// Semiclassical amplitude sqrt((2 beta + delta)/chi); throws BelowBifurcation
/// when the radicand is negative.
double semiclassical_alpha(const SystemParams& p);

// Embedded single-factor operators on the composite space.
Operator embed_kpo(const Operator& op_kpo, const HilbertSpec& space);
Operator embed_qubit(const Operator& op_qubit, const HilbertSpec& space);

}  // namespace kposim
