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

#include "kposim/model.hpp"

#include <cmath>
#include <iostream>

namespace kposim {

SystemParams SystemParams::from_mhz(double delta_mhz, double chi_mhz, double beta_mhz, double g_mhz,
                                    double lambda_p_mhz, double delta_q_mhz, double gamma1_mhz,
                                    double gamma2_mhz, double qubit_offset_mhz) {
    SystemParams p;
    p.delta = kTwoPi * delta_mhz;
    p.chi = kTwoPi * chi_mhz;
    p.beta = kTwoPi * beta_mhz;
    p.g = kTwoPi * g_mhz;
    p.lambda_p = kTwoPi * lambda_p_mhz;
    p.delta_q = kTwoPi * delta_q_mhz;
    p.gamma1 = kTwoPi * gamma1_mhz;
    p.gamma2 = kTwoPi * gamma2_mhz;
    p.qubit_offset = kTwoPi * qubit_offset_mhz;
    p.validate();
    return p;
}

void SystemParams::validate() const {
    if (chi <= 0) throw Error("chi must be > 0");
    if (gamma1 < 0 || gamma2 < 0) throw Error("decay rates must be >= 0");
    if (beta < 0) throw Error("beta must be >= 0");
    if (delta >= 0)
        std::cerr << "[kposim] warning: delta >= 0 (the bifurcation regime assumes delta < 0)\n";
}

Operator embed_kpo(const Operator& op_kpo, const HilbertSpec& space) {
    return tensor(op_kpo, qubit_identity());
}

Operator embed_qubit(const Operator& op_qubit, const HilbertSpec& space) {
    return tensor(fock_identity(space), op_qubit);
}

Operator build_h_kpo(const SystemParams& p, const HilbertSpec& space) {
    const Matrix a = annihilation(space).mat;
    const Matrix ad = a.adjoint();
    Matrix h = p.delta * (ad * a) - 0.5 * p.chi * (ad * ad * a * a) + p.beta * (a * a + ad * ad);
    return embed_kpo({std::move(h), "H_KPO"}, space);
}

Operator build_h_qubit(const SystemParams& p, const HilbertSpec& space) {
    Matrix h = 0.5 * p.qubit_offset * pauli(Pauli::Z).mat;
    return embed_qubit({std::move(h), "H_G"}, space);
}

Operator build_h_int(const SystemParams& p, const HilbertSpec& space) {
    const Matrix a_full = embed_kpo(annihilation(space), space).mat;
    const Matrix sp_full = embed_qubit(pauli(Pauli::Plus), space).mat;
    Matrix h = p.g * (a_full * sp_full);
    h += h.adjoint().eval();
    return {std::move(h), "H_I"};
}

Operator build_h_drive(const SystemParams& p, const HilbertSpec& space, double t_us) {
    const Complex phase = std::exp(Complex(0.0, -p.delta_q * t_us));
    const Matrix sp_full = embed_qubit(pauli(Pauli::Plus), space).mat;
    Matrix h = p.lambda_p * phase * sp_full;
    h += h.adjoint().eval();
    return {std::move(h), "H_D"};
}

Operator build_static(const SystemParams& p, const HilbertSpec& space) {
    Matrix h = build_h_kpo(p, space).mat + build_h_qubit(p, space).mat + build_h_int(p, space).mat;
    return {std::move(h), "H_static"};
}

Operator build_total(const SystemParams& p, const HilbertSpec& space, double t_us) {
    Matrix h = build_static(p, space).mat + build_h_drive(p, space, t_us).mat;
    return {std::move(h), "H"};
}

double semiclassical_alpha(const SystemParams& p) {
    const double r = (2.0 * p.beta + p.delta) / p.chi;
    if (r < 0) throw BelowBifurcation("(2 beta + delta)/chi < 0");
    return std::sqrt(r);
}

}  // namespace kposim
