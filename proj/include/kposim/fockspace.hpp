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

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "kposim/errors.hpp"

namespace kposim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Truncated KPO Fock space tensored with a two-level ancilla.
/// Composite basis index is n * 2 + q with q = 0 -> |e>, q = 1 -> |g>,
/// so sigma_z = diag(1, -1) and sigma_z |g> = -|g>.
struct HilbertSpec {
    int fock_cutoff = 20;

    static constexpr int kQubitLevels = 2;

    explicit HilbertSpec(int cutoff = 20) : fock_cutoff(cutoff) {
        if (fock_cutoff < 2) throw Error("fock_cutoff must be >= 2");
    }
    int total_dim() const { return kQubitLevels * fock_cutoff; }
};

/// Dense operator with dimension metadata and a human-readable label.
struct Operator {
    Matrix mat;
    std::string label;

    Operator() = default;
    Operator(Matrix m, std::string l) : mat(std::move(m)), label(std::move(l)) {
        if (mat.rows() != mat.cols()) throw DimensionMismatch("operator matrix must be square: " + label);
    }
    Eigen::Index dim() const { return mat.rows(); }
};

struct Ket {
    Vector amp;

    Ket() = default;
    explicit Ket(Vector v) : amp(std::move(v)) {}
    Eigen::Index dim() const { return amp.size(); }
    /// Scale to unit Euclidean norm; throws DegenerateState when the norm underflows.
    void normalize(double min_norm = 1e-8) {
        const double n = amp.norm();
        if (n < min_norm) throw DegenerateState("state norm below " + std::to_string(min_norm));
        amp /= n;
    }
};

struct DensityMatrix {
    Matrix mat;

    DensityMatrix() = default;
    explicit DensityMatrix(Matrix m) : mat(std::move(m)) {
        if (mat.rows() != mat.cols()) throw DimensionMismatch("density matrix must be square");
    }
    Eigen::Index dim() const { return mat.rows(); }
    double trace_real() const { return mat.trace().real(); }
};

bool is_hermitian(const Matrix& m, double tol = 1e-12);

// --- qubit-only operators (2x2) ---
enum class Pauli { X, Y, Z, Plus, Minus };
Operator pauli(Pauli which);
Operator qubit_identity();
Ket qubit_ground();
Ket qubit_excited();

// --- KPO-only operators (fock_cutoff x fock_cutoff) ---
Operator annihilation(const HilbertSpec& space);
Operator creation(const HilbertSpec& space);
Operator number_op(const HilbertSpec& space);
Operator fock_identity(const HilbertSpec& space);
Operator displacement(Complex alpha, const HilbertSpec& space);
/// exp(i pi a^dag a), the photon-number parity.
Operator fock_parity(const HilbertSpec& space);

Ket fock_state(int n, const HilbertSpec& space);
Ket coherent_state(Complex alpha, const HilbertSpec& space);
enum class CatParity { Even, Odd };
Ket cat_state(double alpha, CatParity parity, const HilbertSpec& space);
/// Normalized (D_alpha +/- D_{-alpha}) |n>.
Ket displaced_fock_cat(double alpha, int n, CatParity parity, const HilbertSpec& space);

/// Kronecker product, fixed factor order KPO (x) qubit.
Operator tensor(const Operator& a, const Operator& b);
Ket tensor(const Ket& a, const Ket& b);

/// Unitary matrix exponential of -i * H for Hermitian H via eigendecomposition.
Matrix expm_unitary(const Matrix& hermitian_generator);

/// Emitted to stderr when |alpha|^2 exceeds fock_cutoff / 4.
void warn_truncation_risk(Complex alpha, const HilbertSpec& space, const char* where);

}  // namespace kposim
