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

#include "kposim/fockspace.hpp"

#include <cmath>
#include <iostream>

namespace kposim {

namespace {
constexpr Complex kI{0.0, 1.0};
}

bool is_hermitian(const Matrix& m, double tol) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Operator pauli(Pauli which) {
    Matrix m = Matrix::Zero(2, 2);
    switch (which) {
        case Pauli::X:
            m << 0, 1, 1, 0;
            return {m, "sigma_x"};
        case Pauli::Y:
            m << 0, -kI, kI, 0;
            return {m, "sigma_y"};
        case Pauli::Z:
            m << 1, 0, 0, -1;
            return {m, "sigma_z"};
        case Pauli::Plus:
            m(0, 1) = 1;  // |e><g|
            return {m, "sigma_plus"};
        case Pauli::Minus:
            m(1, 0) = 1;
            return {m, "sigma_minus"};
    }
    throw Error("unreachable pauli kind");
}

Operator qubit_identity() { return {Matrix::Identity(2, 2), "I_q"}; }

Ket qubit_ground() {
    Vector v = Vector::Zero(2);
    v(1) = 1;
    return Ket{v};
}

Ket qubit_excited() {
    Vector v = Vector::Zero(2);
    v(0) = 1;
    return Ket{v};
}

Operator annihilation(const HilbertSpec& space) {
    const int n = space.fock_cutoff;
    Matrix m = Matrix::Zero(n, n);
    for (int k = 1; k < n; ++k) m(k - 1, k) = std::sqrt(static_cast<double>(k));
    return {m, "a"};
}

Operator creation(const HilbertSpec& space) {
    Operator a = annihilation(space);
    return {a.mat.adjoint(), "a_dag"};
}

Operator number_op(const HilbertSpec& space) {
    const int n = space.fock_cutoff;
    Matrix m = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = k;
    return {m, "n"};
}

Operator fock_identity(const HilbertSpec& space) {
    return {Matrix::Identity(space.fock_cutoff, space.fock_cutoff), "I_kpo"};
}

Operator fock_parity(const HilbertSpec& space) {
    const int n = space.fock_cutoff;
    Matrix m = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
    return {m, "parity"};
}

void warn_truncation_risk(Complex alpha, const HilbertSpec& space, const char* where) {
    if (std::norm(alpha) > space.fock_cutoff / 4.0) {
        std::cerr << "[kposim] TruncationRisk in " << where << ": |alpha|^2=" << std::norm(alpha)
                  << " exceeds fock_cutoff/4=" << space.fock_cutoff / 4.0 << "\n";
    }
}

Matrix expm_unitary(const Matrix& hermitian_generator) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_generator);
    const Eigen::VectorXd& ev = es.eigenvalues();
    Vector phases(ev.size());
    for (Eigen::Index k = 0; k < ev.size(); ++k) phases(k) = std::exp(-kI * ev(k));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Operator displacement(Complex alpha, const HilbertSpec& space) {
    warn_truncation_risk(alpha, space, "displacement");
    const Operator a = annihilation(space);
    // alpha a^dag - alpha^* a is anti-Hermitian; exponentiate as exp(-i G) with G Hermitian.
    Matrix gen = alpha * a.mat.adjoint() - std::conj(alpha) * a.mat;
    Matrix g_herm = kI * gen;
    return {expm_unitary(g_herm), "D(" + std::to_string(alpha.real()) + ")"};
}

Ket fock_state(int n, const HilbertSpec& space) {
    if (n < 0 || n >= space.fock_cutoff) throw Error("fock_state index out of range");
    Vector v = Vector::Zero(space.fock_cutoff);
    v(n) = 1;
    return Ket{v};
}

Ket coherent_state(Complex alpha, const HilbertSpec& space) {
    warn_truncation_risk(alpha, space, "coherent_state");
    Vector v(space.fock_cutoff);
    // amplitudes alpha^n / sqrt(n!) built recursively, then renormalized.
    Complex c = 1.0;
    for (int n = 0; n < space.fock_cutoff; ++n) {
        if (n > 0) c *= alpha / std::sqrt(static_cast<double>(n));
        v(n) = c;
    }
    Ket k{v};
    k.normalize();
    return k;
}

Ket cat_state(double alpha, CatParity parity, const HilbertSpec& space) {
    if (parity == CatParity::Odd && alpha == 0.0)
        throw DegenerateState("odd cat state undefined at alpha = 0");
    const double s = (parity == CatParity::Even) ? 1.0 : -1.0;
    Ket p = coherent_state(alpha, space);
    Ket m = coherent_state(-alpha, space);
    Ket k{p.amp + s * m.amp};
    k.normalize();
    return k;
}

Ket displaced_fock_cat(double alpha, int n, CatParity parity, const HilbertSpec& space) {
    if (n >= space.fock_cutoff / 2) throw Error("displaced_fock_cat: n must be < fock_cutoff/2");
    const double s = (parity == CatParity::Even) ? 1.0 : -1.0;
    const Matrix dp = displacement(alpha, space).mat;
    const Vector f = fock_state(n, space).amp;
    // D_{-alpha} = D_alpha^dag for the standard convention.
    Ket k{dp * f + s * (dp.adjoint() * f)};
    k.normalize();
    return k;
}

Operator tensor(const Operator& a, const Operator& b) {
    const Eigen::Index ra = a.mat.rows(), rb = b.mat.rows();
    Matrix m(ra * rb, ra * rb);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ra; ++j) m.block(i * rb, j * rb, rb, rb) = a.mat(i, j) * b.mat;
    return {m, a.label + " (x) " + b.label};
}

Ket tensor(const Ket& a, const Ket& b) {
    Vector v(a.dim() * b.dim());
    for (Eigen::Index i = 0; i < a.dim(); ++i) v.segment(i * b.dim(), b.dim()) = a.amp(i) * b.amp;
    return Ket{v};
}

}  // namespace kposim
