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

#include "gtest/gtest.h"

#include "../test_util.h"
#include "qsim/error.h"
#include "qsim/gates.h"

using namespace qsim;
using qsim::testing::multiply;

namespace {

const Complex I{0.0, 1.0};
const double kR = 1.0 / std::numbers::sqrt2;

const ComplexMatrix& m(const char* label) { return standard_gate(label).matrix; }

}  // namespace

TEST(standard_gate, h_on_zero) {
  StateVector out = multiply(m("H"), StateVector::basis(1, 0));
  EXPECT_LE(max_abs_diff(out, StateVector::from_amplitudes({kR, kR})), 1e-15);
}

TEST(standard_gate, x_on_zero) { EXPECT_EQ(multiply(m("X"), StateVector::basis(1, 0)), StateVector::basis(1, 1)); }

TEST(standard_gate, unknown_label) {
  try {
    standard_gate("Q");
    FAIL() << "expected UnknownGate";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownGate);
  }
}

TEST(standard_gate, case_insensitive_lookup) {
  EXPECT_EQ(standard_gate("cnot").kind, GateKind::Cnot);
  EXPECT_EQ(standard_gate("Swap").kind, GateKind::Swap);
  EXPECT_EQ(standard_gate("h").kind, GateKind::H);
}

TEST(standard_gate, matrices_match_table) {
  EXPECT_EQ(m("X"), (ComplexMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(m("Y"), (ComplexMatrix{{0, -I}, {I, 0}}));
  EXPECT_EQ(m("Z"), (ComplexMatrix{{1, 0}, {0, -1}}));
  EXPECT_EQ(m("S"), (ComplexMatrix{{1, 0}, {0, I}}));
  EXPECT_LE(max_abs_diff(m("T"), ComplexMatrix{{1, 0}, {0, Complex(kR, kR)}}), 1e-15);
  EXPECT_EQ(m("H"), (ComplexMatrix{{kR, kR}, {kR, -kR}}));
  EXPECT_EQ(m("SWAP"), (ComplexMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(m("CNOT"), (ComplexMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
}

TEST(standard_gate, arity_matches_dimension) {
  for (GateKind kind : all_gate_kinds()) {
    const Gate& g = standard_gate(kind);
    EXPECT_EQ(g.matrix.rows(), std::size_t{1} << g.arity) << g.label;
    EXPECT_TRUE(is_unitary(g.matrix, 1e-12)) << g.label;
  }
}

TEST(truth_table, cnot_and_swap_rows) {
  EXPECT_EQ(apply_two_qubit_truth_table(standard_gate("CNOT"), "10"), StateVector::from_label("11"));
  EXPECT_EQ(apply_two_qubit_truth_table(standard_gate("SWAP"), "01"), StateVector::from_label("10"));
  EXPECT_EQ(apply_two_qubit_truth_table(standard_gate("CNOT"), "00"), StateVector::from_label("00"));
}

TEST(truth_table, full_tables) {
  const char* cnot[4][2] = {{"00", "00"}, {"01", "01"}, {"10", "11"}, {"11", "10"}};
  const char* swap[4][2] = {{"00", "00"}, {"01", "10"}, {"10", "01"}, {"11", "11"}};
  for (auto& row : cnot) {
    EXPECT_EQ(apply_two_qubit_truth_table(standard_gate("CNOT"), row[0]), StateVector::from_label(row[1]));
  }
  for (auto& row : swap) {
    EXPECT_EQ(apply_two_qubit_truth_table(standard_gate("SWAP"), row[0]), StateVector::from_label(row[1]));
  }
}

TEST(truth_table, rejects_single_qubit_gate) {
  try {
    apply_two_qubit_truth_table(standard_gate("X"), "00");
    FAIL() << "expected ArityMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
  }
  EXPECT_THROW(apply_two_qubit_truth_table(standard_gate("CNOT"), "1"), Error);
}

TEST(identities, involutions) {
  for (const char* label : {"H", "X", "Y", "Z"}) {
    EXPECT_LE(max_abs_diff(matmul(m(label), m(label)), ComplexMatrix::identity(2)), 1e-12) << label;
  }
  for (const char* label : {"SWAP", "CNOT"}) {
    EXPECT_LE(max_abs_diff(matmul(m(label), m(label)), ComplexMatrix::identity(4)), 1e-12) << label;
  }
}

TEST(identities, phase_tower) {
  EXPECT_LE(max_abs_diff(matmul(m("S"), m("S")), m("Z")), 1e-12);
  EXPECT_LE(max_abs_diff(matmul(m("T"), m("T")), m("S")), 1e-12);
}

TEST(identities, hadamard_basis_change) {
  EXPECT_LE(max_abs_diff(matmul(matmul(m("H"), m("X")), m("H")), m("Z")), 1e-12);
  EXPECT_LE(max_abs_diff(matmul(matmul(m("H"), m("Z")), m("H")), m("X")), 1e-12);
}
