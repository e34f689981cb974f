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
#include "qsim/hermitian.h"
#include "qsim/state.h"

using namespace qsim;
using qsim::testing::random_density;
using qsim::testing::random_state;

namespace {

const double kR = 1.0 / std::numbers::sqrt2;

StateVector hadamard_state() { return StateVector::from_amplitudes({kR, kR}); }

template <typename F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(from_amplitudes, basis_state) {
  StateVector s = StateVector::from_amplitudes({1.0, 0.0});
  EXPECT_EQ(s.num_qubits(), 1);
  EXPECT_EQ(s, StateVector::basis(1, 0));
}

TEST(from_amplitudes, hadamard_state_stored_verbatim) {
  StateVector s = hadamard_state();
  EXPECT_EQ(s[0], Complex(kR));
  EXPECT_EQ(s[1], Complex(kR));
}

TEST(from_amplitudes, rejects_unnormalized) {
  EXPECT_EQ(error_kind([] { StateVector::from_amplitudes({1.0, 1.0}); }), ErrorKind::NotNormalized);
  EXPECT_EQ(error_kind([] { StateVector::from_amplitudes({1.0 + 2e-10, 0.0}); }), ErrorKind::NotNormalized);
}

TEST(from_amplitudes, rejects_non_power_of_two) {
  EXPECT_EQ(error_kind([] { StateVector::from_amplitudes({1.0, 0.0, 0.0}); }), ErrorKind::NotPowerOfTwo);
  EXPECT_EQ(error_kind([] { StateVector::from_amplitudes({}); }), ErrorKind::NotPowerOfTwo);
}

TEST(state_vector, normalize_helper) {
  StateVector s = StateVector::normalize({1.0, 1.0});
  EXPECT_NEAR(std::abs(s[0] - kR), 0.0, 1e-15);
  EXPECT_NEAR(s.norm(), 1.0, 1e-15);
  EXPECT_EQ(error_kind([] { StateVector::normalize({0.0, 0.0}); }), ErrorKind::NotNormalized);
}

TEST(state_vector, label_ordering_qubit_zero_is_most_significant) {
  EXPECT_EQ(StateVector::from_label("01"), StateVector::basis(2, 1));
  EXPECT_EQ(StateVector::from_label("10"), StateVector::basis(2, 2));
  EXPECT_EQ(StateVector::from_label("110"), StateVector::basis(3, 6));
}

TEST(inner_product, examples) {
  StateVector zero = StateVector::basis(1, 0);
  StateVector one = StateVector::basis(1, 1);
  EXPECT_EQ(inner_product(zero, zero), Complex(1.0));
  EXPECT_EQ(inner_product(zero, one), Complex(0.0));
  EXPECT_NEAR(std::abs(inner_product(zero, hadamard_state()) - kR), 0.0, 1e-15);
}

TEST(inner_product, conjugates_left_argument) {
  StateVector a = StateVector::from_amplitudes({Complex(0, kR), kR});
  StateVector b = StateVector::basis(1, 0);
  EXPECT_NEAR(std::abs(inner_product(a, b) - Complex(0, -kR)), 0.0, 1e-15);
}

TEST(inner_product, dimension_mismatch) {
  EXPECT_EQ(error_kind([] { inner_product(StateVector::basis(1, 0), StateVector::basis(2, 0)); }),
            ErrorKind::DimensionMismatch);
}

TEST(to_density, examples) {
  ComplexMatrix half{{0.5, 0.5}, {0.5, 0.5}};
  EXPECT_LE(max_abs_diff(to_density(hadamard_state()).matrix(), half), 1e-15);
  EXPECT_EQ(to_density(StateVector::basis(1, 0)).matrix(), (ComplexMatrix{{1, 0}, {0, 0}}));
  EXPECT_EQ(to_density(StateVector::basis(1, 1)).matrix(), (ComplexMatrix{{0, 0}, {0, 1}}));
}

TEST(to_density, satisfies_invariants_and_is_pure) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      DensityMatrix rho = to_density(random_state(rng, n));
      EXPECT_TRUE(satisfies_density_invariants(rho.matrix()));
      EXPECT_NEAR(purity(rho), 1.0, 1e-10);
      EXPECT_GE(eig_hermitian(rho.matrix()).eigenvalues.front(), -1e-9);
    }
  }
}

TEST(from_ensemble, equal_mixture_of_basis_states) {
  DensityMatrix rho = from_ensemble({{0.5, StateVector::basis(1, 0)}, {0.5, StateVector::basis(1, 1)}});
  EXPECT_EQ(rho.matrix(), (ComplexMatrix{{0.5, 0}, {0, 0.5}}));
}

TEST(from_ensemble, singleton_is_pure) {
  DensityMatrix rho = from_ensemble({{1.0, StateVector::basis(1, 0)}});
  EXPECT_EQ(rho.matrix(), (ComplexMatrix{{1, 0}, {0, 0}}));
}

TEST(from_ensemble, rejects_bad_probabilities) {
  EXPECT_EQ(error_kind([] {
              from_ensemble({{0.7, StateVector::basis(1, 0)}, {0.7, StateVector::basis(1, 1)}});
            }),
            ErrorKind::ProbabilitiesInvalid);
  EXPECT_EQ(error_kind([] {
              from_ensemble({{1.5, StateVector::basis(1, 0)}, {-0.5, StateVector::basis(1, 1)}});
            }),
            ErrorKind::ProbabilitiesInvalid);
  EXPECT_EQ(error_kind([] { from_ensemble({}); }), ErrorKind::ProbabilitiesInvalid);
}

TEST(from_ensemble, rejects_mixed_qubit_counts) {
  EXPECT_EQ(error_kind([] {
              from_ensemble({{0.5, StateVector::basis(1, 0)}, {0.5, StateVector::basis(2, 1)}});
            }),
            ErrorKind::DimensionMismatch);
}

TEST(from_ensemble, singleton_equals_to_density_exactly) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    StateVector s = random_state(rng, 3);
    EXPECT_EQ(from_ensemble({{1.0, s}}), to_density(s));
  }
}

TEST(purity, examples) {
  EXPECT_NEAR(purity(to_density(hadamard_state())), 1.0, 1e-10);
  EXPECT_NEAR(purity(DensityMatrix::from_matrix(ComplexMatrix{{0.5, 0}, {0, 0.5}})), 0.5, 1e-15);
  EXPECT_NEAR(purity(DensityMatrix::from_matrix(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}})), 1.0, 1e-15);
}

TEST(purity, bounds_on_random_mixtures) {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      double p = purity(random_density(rng, n, 4));
      EXPECT_GE(p, 1.0 / std::ldexp(1.0, n) - 1e-10);
      EXPECT_LE(p, 1.0 + 1e-10);
    }
  }
}

TEST(dephase, examples) {
  DensityMatrix coherent = DensityMatrix::from_matrix(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}});
  EXPECT_EQ(dephase(coherent).matrix(), (ComplexMatrix{{0.5, 0}, {0, 0.5}}));
  DensityMatrix mixed = DensityMatrix::from_matrix(ComplexMatrix{{0.5, 0}, {0, 0.5}});
  EXPECT_EQ(dephase(mixed), mixed);
  DensityMatrix projector = to_density(StateVector::basis(1, 0));
  EXPECT_EQ(dephase(projector), projector);
}

TEST(dephase, never_increases_purity) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    DensityMatrix rho = random_density(rng, 2, 2);
    DensityMatrix d = dephase(rho);
    EXPECT_LE(purity(d), purity(rho) + 1e-12);
    EXPECT_TRUE(satisfies_density_invariants(d.matrix()));
  }
}

TEST(density_matrix, validation) {
  EXPECT_EQ(error_kind([] { DensityMatrix::from_matrix(ComplexMatrix{{0.5, 0.5}, {0.0, 0.5}}); }),
            ErrorKind::NotDensityMatrix);
  EXPECT_EQ(error_kind([] { DensityMatrix::from_matrix(ComplexMatrix{{0.5, 0}, {0, 0.4}}); }),
            ErrorKind::NotDensityMatrix);
  EXPECT_EQ(error_kind([] { DensityMatrix::from_matrix(ComplexMatrix{{1.5, 0}, {0, -0.5}}); }),
            ErrorKind::NotDensityMatrix);
  EXPECT_EQ(error_kind([] { DensityMatrix::from_matrix(ComplexMatrix(3, 3)); }), ErrorKind::NotPowerOfTwo);
  EXPECT_EQ(error_kind([] { DensityMatrix::from_matrix(ComplexMatrix(2, 4)); }), ErrorKind::NotSquare);
}

TEST(properties, cauchy_schwarz) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    StateVector a = random_state(rng, 3);
    StateVector b = random_state(rng, 3);
    EXPECT_LE(std::abs(inner_product(a, b)), 1.0 + 1e-12);
  }
}

TEST(properties, kron_state_is_normalized_product) {
  std::mt19937_64 rng(26);
  StateVector a = random_state(rng, 1);
  StateVector b = random_state(rng, 2);
  StateVector ab = kron_state(a, b);
  EXPECT_EQ(ab.num_qubits(), 3);
  EXPECT_NEAR(ab.norm(), 1.0, 1e-12);
  EXPECT_EQ(ab[5], a[1] * b[1]);
}
