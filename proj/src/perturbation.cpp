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

#include "kposim/perturbation.hpp"

#include <array>
#include <cmath>

namespace kposim {

namespace {

constexpr Complex kI{0.0, 1.0};

using Mat2 = Eigen::Matrix2cd;

// H_I(t) = sum_k coeff_k * M_k * e^{i w_k t}, lambda_p factored out.
struct Term {
    Mat2 m;
    double w;
};

std::array<Term, 6> terms(double g, double alpha, double delta_q) {
    Mat2 z, sp, sm;
    z << 1, 0, 0, -1;
    sp << 0, 1, 0, 0;
    sm << 0, 0, 1, 0;
    const double ga2 = 2.0 * g * alpha;
    return {{
        {0.5 * z, -delta_q},
        {0.5 * z, +delta_q},
        {0.5 * sp, ga2 - delta_q},
        {-0.5 * sp, ga2 + delta_q},
        {-0.5 * sm, -(ga2 + delta_q)},
        {0.5 * sm, -ga2 + delta_q},
    }};
}

// E(w, t) = Int_0^t e^{i w tau} dtau, series-protected for small |w t|.
Complex e_int(double w, double t) {
    const Complex z = kI * w * t;
    if (std::abs(z) < 0.5) {
        // t * sum_{n>=0} z^n / (n+1)!
        Complex sum = 0.0, term = 1.0;
        for (int n = 0;; ++n) {
            const Complex contrib = term / static_cast<double>(n + 1);
            sum += contrib;
            if (std::abs(contrib) < 1e-20) break;
            term *= z / static_cast<double>(n + 1);
        }
        return t * sum;
    }
    return (std::exp(z) - 1.0) / (kI * w);
}

// J_m(a, t) = Int_0^t tau^m e^{i a tau} dtau.
Complex j_int(int m, double a, double t) {
    const Complex z = kI * a * t;
    if (std::abs(z) < 0.5) {
        // t^{m+1} * sum_{n>=0} z^n / (n! (m+n+1))
        Complex sum = 0.0, term = 1.0;
        for (int n = 0;; ++n) {
            const Complex contrib = term / static_cast<double>(m + n + 1);
            sum += contrib;
            if (std::abs(contrib) < 1e-20) break;
            term *= z / static_cast<double>(n + 1);
        }
        return std::pow(t, m + 1) * sum;
    }
    // stable upward recurrence for |a t| >= 0.5
    Complex j = e_int(a, t);
    const Complex e = std::exp(z);
    double tm = 1.0;
    for (int k = 1; k <= m; ++k) {
        tm *= t;
        j = (tm * e - static_cast<double>(k) * j) / (kI * a);
    }
    return j;
}

// F(a, b, t) = Int_0^t e^{i a t1} E(b, t1) dt1.
Complex f_int(double a, double b, double t) {
    if (std::abs(b * t) < 1e-4) {
        // E(b, t1) = sum_{m>=1} (i b)^{m-1} t1^m / m!
        Complex sum = 0.0, coeff = 1.0;
        double fact = 1.0;
        for (int m = 1; m <= 5; ++m) {
            fact *= m;
            sum += coeff / fact * j_int(m, a, t);
            coeff *= kI * b;
        }
        return sum;
    }
    return (e_int(a + b, t) - e_int(a, t)) / (kI * b);
}

}  // namespace

Operator interaction_hamiltonian(double t_us, double g, double alpha, double delta_q) {
    Matrix h = Matrix::Zero(2, 2);
    for (const auto& [m, w] : terms(g, alpha, delta_q)) h += std::exp(kI * w * t_us) * m;
    return {std::move(h), "H_I(t)"};
}

std::pair<Complex, Complex> perturbative_amplitudes(const Ket& psi0, const Ket& psif, double t_us,
                                                    double lambda_p, double g, double alpha,
                                                    double delta_q) {
    if (psi0.dim() != 2 || psif.dim() != 2)
        throw DimensionMismatch("perturbative_amplitudes: states must be 2-vectors");
    const auto tt = terms(g, alpha, delta_q);

    Mat2 d1 = Mat2::Zero();
    for (const auto& [m, w] : tt) d1 += e_int(w, t_us) * m;
    d1 *= -kI;

    Mat2 d2 = Mat2::Zero();
    for (const auto& [mk, wk] : tt)
        for (const auto& [ml, wl] : tt) d2 += f_int(wk, wl, t_us) * (mk * ml);
    d2 *= -1.0;

    const Eigen::Vector2cd v0 = psi0.amp.head<2>();
    const Eigen::Vector2cd vf = psif.amp.head<2>();
    const Complex c1 = lambda_p * vf.dot(d1 * v0);
    const Complex c2 = lambda_p * lambda_p * vf.dot(d2 * v0);
    return {c1, c2};
}

std::vector<Resonance> resonance_frequencies(double g_mhz, double alpha) {
    if (g_mhz < 0 || alpha < 0) throw Error("resonance_frequencies: g and alpha must be >= 0");
    const double ga = g_mhz * alpha;
    std::vector<Resonance> out = {
        {-2.0 * ga, 1, "-2ga"}, {-ga, 2, "-ga"}, {0.0, 1, "dq=0"}, {+ga, 2, "+ga"},
        {+2.0 * ga, 1, "+2ga"},
    };
    return out;
}

}  // namespace kposim
