// Copyright 2026 The qsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "../test_util.h"
#include "qsim/error.h"
#include "qsim/evolve.h"
#include "qsim/observables.h"

using namespace qsim;
using qsim::testing::random_density;
using qsim::testing::random_hermitian;
using qsim::testing::random_state;

namespace {

const Complex I{0.0, 1.0};
const double kPi = std::numbers::pi;

Hamiltonian pauli(const char* label) { return Hamiltonian(standard_gate(label).matrix); }

}  // namespace

TEST(hamiltonian, errors) {
  try {
    Hamiltonian(ComplexMatrix{{0, 1}, {0, 0}});
    FAIL() << "expected NotHermitian";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
  }
  EXPECT_THROW(Hamiltonian(ComplexMatrix::identity(2), 0.0), Error);
  EXPECT_THROW(Hamiltonian(ComplexMatrix::identity(2), -1.0), Error);
}

TEST(evolve, examples) {
  std::mt19937_64 rng(71);
  StateVector s = random_state(rng, 1);
  EXPECT_LE(max_abs_diff(evolve(pauli("Z"), {0.0}, s), s), 1e-15);

  for (double t : {0.3, 1.0, 2.5}) {
    StateVector out = evolve(pauli("Z"), {t}, StateVector::basis(1, 0));
    EXPECT_LE(std::abs(out[0] - std::exp(-I * t)), 1e-12);
    EXPECT_LE(std::abs(out[1]), 1e-12);
  }

  StateVector flipped = evolve(pauli("X"), {kPi / 2}, StateVector::basis(1, 0));
  EXPECT_LE(std::abs(flipped[0]), 1e-12);
  EXPECT_LE(std::abs(flipped[1] - (-I)), 1e-12);
}

TEST(evolve, dimension_mismatch) {
  try {
    evolve(pauli("X"), {1.0}, StateVector::basis(2, 0));
    FAIL() << "expected DimensionMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
  EXPECT_THROW(evolve_density(pauli("X"), {1.0}, to_density(StateVector::basis(2, 0))), Error);
}

TEST(evolve_density, examples) {
  std::mt19937_64 rng(72);
  DensityMatrix rho = random_density(rng, 1);
  EXPECT_LE(max_abs_diff(evolve_density(pauli("X"), {0.0}, rho).matrix(), rho.matrix()), 1e-15);

  DensityMatrix zero = to_density(StateVector::basis(1, 0));
  for (double t : {0.1, 1.7, 4.0}) {
    EXPECT_LE(max_abs_diff(evolve_density(pauli("Z"), {t}, zero).matrix(), zero.matrix()), 1e-12);
  }
  EXPECT_LE(max_abs_diff(evolve_density(pauli("X"), {kPi / 2}, zero).matrix(),
                         to_density(StateVector::basis(1, 1)).matrix()),
            1e-12);
}

TEST(propagator, rabi_closed_form) {
  // exp(-i X t) = cos t I - i sin t X.
  for (double t : {-1.2, 0.4, 3.0}) {
    ComplexMatrix expected = Complex(std::cos(t)) * ComplexMatrix::identity(2) +
                             (-I * std::sin(t)) * standard_gate("X").matrix;
    EXPECT_LE(max_abs_diff(pauli("X").propagator(t), expected), 1e-12);
  }
}

TEST(properties, propagators_are_unitary) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> time(-5.0, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    Hamiltonian h(random_hermitian(rng, std::size_t{1} << (1 + trial % 3)));
    EXPECT_TRUE(is_unitary(h.propagator(time(rng)), 1e-10));
  }
}

TEST(properties, composition) {
  std::mt19937_64 rng(74);
  std::uniform_real_distribution<double> time(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 3;
    Hamiltonian h(random_hermitian(rng, std::size_t{1} << n));
    StateVector s = random_state(rng, n);
    double t1 = time(rng), t2 = time(rng);
    EXPECT_LE(max_abs_diff(evolve(h, {t1 + t2}, s), evolve(h, {t2}, evolve(h, {t1}, s))), 1e-9);
  }
}

TEST(properties, energy_conserved_and_norm_preserved) {
  std::mt19937_64 rng(75);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 3;
    ComplexMatrix m = random_hermitian(rng, std::size_t{1} << n);
    Hamiltonian h(m);
    Observable energy("H", m);
    StateVector s = random_state(rng, n);
    double e0 = expectation(energy, s);
    for (double t : {0.5, 1.0, 7.0, -2.0}) {
      StateVector out = evolve(h, {t}, s);
      EXPECT_NEAR(out.norm(), 1.0, 1e-10);
      EXPECT_NEAR(expectation(energy, out), e0, 1e-9);
    }
  }
}

TEST(properties, purity_invariant) {
  std::mt19937_64 rng(76);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 3;
    Hamiltonian h(random_hermitian(rng, std::size_t{1} << n));
    DensityMatrix rho = random_density(rng, n);
    DensityMatrix out = evolve_density(h, {1.3}, rho);
    EXPECT_NEAR(purity(out), purity(rho), 1e-10);
    EXPECT_TRUE(satisfies_density_invariants(out.matrix()));
  }
}

TEST(properties, reversibility) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 3;
    Hamiltonian h(random_hermitian(rng, std::size_t{1} << n));
    StateVector s = random_state(rng, n);
    EXPECT_LE(max_abs_diff(evolve(h, {-2.2}, evolve(h, {2.2}, s)), s), 1e-9);
  }
}

TEST(properties, hbar_rescales_time) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 30; ++trial) {
    ComplexMatrix m = random_hermitian(rng, 4);
    StateVector s = random_state(rng, 2);
    EXPECT_LE(max_abs_diff(evolve(Hamiltonian(m, 2.0), {3.0}, s), evolve(Hamiltonian(m), {1.5}, s)), 1e-10);
  }
}

TEST(properties, density_agrees_with_vector) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 3;
    Hamiltonian h(random_hermitian(rng, std::size_t{1} << n));
    StateVector s = random_state(rng, n);
    EXPECT_LE(max_abs_diff(evolve_density(h, {0.9}, to_density(s)).matrix(), to_density(evolve(h, {0.9}, s)).matrix()),
              1e-10);
  }
}
