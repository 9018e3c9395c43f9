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

#include <doctest.h>

#include <cmath>

#include "kposim/fockspace.hpp"

using namespace kposim;

TEST_CASE("HilbertSpec dimensions and validation") {
    HilbertSpec s(7);
    CHECK(s.total_dim() == 14);
    CHECK_THROWS_AS(HilbertSpec(1), Error);
}

TEST_CASE("annihilation ladder action") {
    HilbertSpec s3(3), s4(4);
    const Matrix a3 = annihilation(s3).mat;
    // a|1> = |0>
    Vector v = Vector::Zero(3);
    v(1) = 1;
    Vector w = a3 * v;
    CHECK(std::abs(w(0) - 1.0) < 1e-15);
    // a|0> = 0
    v.setZero();
    v(0) = 1;
    CHECK((a3 * v).norm() < 1e-15);
    // <2|a|3> = sqrt(3)
    const Matrix a4 = annihilation(s4).mat;
    CHECK(std::abs(a4(2, 3) - std::sqrt(3.0)) < 1e-15);
}

TEST_CASE("commutator [a, a_dag] = I on the compliant block") {
    HilbertSpec s(8);
    const Matrix a = annihilation(s).mat;
    const Matrix c = a * a.adjoint() - a.adjoint() * a;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) CHECK(std::abs(c(i, j) - (i == j ? 1.0 : 0.0)) < 1e-14);
}

TEST_CASE("Pauli algebra") {
    const Matrix sx = pauli(Pauli::X).mat, sy = pauli(Pauli::Y).mat, sz = pauli(Pauli::Z).mat;
    const Complex i(0, 1);
    CHECK((sx * sy - i * sz).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((sx * sx - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
    // sigma_z |g> = -|g>, sigma_+ |g> = |e>
    const Vector g = qubit_ground().amp, e = qubit_excited().amp;
    CHECK((sz * g + g).norm() < 1e-15);
    CHECK((pauli(Pauli::Plus).mat * g - e).norm() < 1e-15);
    // sigma_pm = (sx pm i sy)/2
    CHECK((pauli(Pauli::Plus).mat - 0.5 * (sx + i * sy)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((pauli(Pauli::Minus).mat - 0.5 * (sx - i * sy)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("tensor product") {
    const Operator i2 = qubit_identity();
    CHECK((tensor(i2, i2).mat - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);

    HilbertSpec s(3);
    const Operator n = number_op(s);
    const Ket v = tensor(fock_state(1, s), qubit_ground());
    const Vector w = tensor(n, i2).mat * v.amp;
    CHECK((w - v.amp).norm() < 1e-15);  // eigenvalue 1

    // bilinearity
    Operator a = annihilation(s);
    Operator a2{2.0 * a.mat, "2a"};
    CHECK((tensor(a2, i2).mat - 2.0 * tensor(a, i2).mat).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("displacement operator") {
    HilbertSpec s(20);
    const Matrix d0 = displacement(0.0, s).mat;
    CHECK((d0 - Matrix::Identity(20, 20)).cwiseAbs().maxCoeff() < 1e-12);

    const Matrix d = displacement(1.0, s).mat;
    // D(alpha)|0> = coherent(alpha)
    Vector vac = fock_state(0, s).amp;
    CHECK((d * vac - coherent_state(1.0, s).amp).norm() < 1e-6);
    // unitarity and inverse
    CHECK((d * d.adjoint() - Matrix::Identity(20, 20)).cwiseAbs().maxCoeff() < 1e-6);
    CHECK((d * displacement(-1.0, s).mat - Matrix::Identity(20, 20)).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("coherent states") {
    HilbertSpec s(25);
    CHECK((coherent_state(0.0, s).amp - fock_state(0, s).amp).norm() < 1e-15);

    const Ket c = coherent_state(1.7, s);
    const Matrix n = number_op(s).mat;
    const double mean = std::real(c.amp.dot(n * c.amp));
    CHECK(std::abs(mean - 1.7 * 1.7) < 1e-4);

    const Ket p = coherent_state(1.0, s), m = coherent_state(-1.0, s);
    CHECK(std::abs(std::abs(p.amp.dot(m.amp)) - std::exp(-2.0)) < 1e-6);
}

TEST_CASE("cat states") {
    HilbertSpec s(25);
    // even cat at alpha -> 0 tends to vacuum
    CHECK((cat_state(1e-6, CatParity::Even, s).amp - fock_state(0, s).amp).norm() < 1e-5);
    // odd cat has no even components
    const Ket odd = cat_state(1.0, CatParity::Odd, s);
    CHECK(std::abs(odd.amp(0)) < 1e-14);
    CHECK(std::abs(odd.amp(2)) < 1e-14);
    // orthogonal parity sectors
    const Ket even = cat_state(1.0, CatParity::Even, s);
    CHECK(std::abs(even.amp.dot(odd.amp)) < 1e-14);
    // parity operator eigenstates
    const Matrix par = fock_parity(s).mat;
    CHECK((par * even.amp - even.amp).norm() < 1e-12);
    CHECK((par * odd.amp + odd.amp).norm() < 1e-12);
    CHECK_THROWS_AS(cat_state(0.0, CatParity::Odd, s), DegenerateState);
}

TEST_CASE("displaced Fock cats") {
    HilbertSpec s(25);
    // n = 0 reduces to the plain cat
    CHECK((displaced_fock_cat(1.3, 0, CatParity::Even, s).amp -
           cat_state(1.3, CatParity::Even, s).amp)
              .norm() < 1e-10);
    // parity sectors
    const Ket k = displaced_fock_cat(1.68, 2, CatParity::Even, s);
    const Matrix par = fock_parity(s).mat;
    CHECK((par * k.amp - k.amp).norm() < 1e-8);
    CHECK(std::abs(k.amp.norm() - 1.0) < 1e-10);
}

TEST_CASE("Ket normalization guard") {
    Ket k{Vector::Zero(4)};
    CHECK_THROWS_AS(k.normalize(), DegenerateState);
}
