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

#ifndef QSIM_ENTANGLE_H_
#define QSIM_ENTANGLE_H_

#include <span>
#include <vector>

#include "qsim/state.h"

namespace qsim {

/// Split of an n-qubit register into two non-empty complementary parts.
class Bipartition {
 public:
  /// Throws Error(InvalidSubsystem) when subsystem_a is empty, covers every
  /// qubit, repeats an index or leaves [0, num_qubits).
  Bipartition(std::vector<int> subsystem_a, int num_qubits);

  const std::vector<int>& subsystem_a() const noexcept { return a_; }
  const std::vector<int>& subsystem_b() const noexcept { return b_; }
  int num_qubits() const noexcept { return num_qubits_; }

  /// The same split with the roles of A and B exchanged.
  Bipartition swapped() const { return Bipartition(b_, num_qubits_); }

 private:
  std::vector<int> a_;
  std::vector<int> b_;
  int num_qubits_;
};

/// Reduced density matrix over `keep` (any order; the result orders the
/// kept qubits ascending). Throws Error(InvalidSubsystem) unless keep is a
/// non-empty strict subset of the qubits.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// The same reduction for a pure state, computed from the amplitudes
/// without forming |s><s|.
DensityMatrix reduced_density(const StateVector& s, std::span<const int> keep);

/// Von Neumann entropy, base 2, of the reduction onto part.subsystem_a().
double entanglement_entropy(const StateVector& s, const Bipartition& part);

/// True iff the purity of the reduction onto part.subsystem_a() is below
/// 1 - tol.
bool is_entangled(const StateVector& s, const Bipartition& part, double tol = 1e-10);

}  // namespace qsim

#endif  // QSIM_ENTANGLE_H_
