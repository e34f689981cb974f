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

#ifndef QSIM_CAPACITY_H_
#define QSIM_CAPACITY_H_

#include <cstddef>

namespace qsim {

/// Qubit-count limits per representation. The defaults keep every dense
/// object at or below 2^24 complex entries.
struct Capacity {
  int statevector_qubits = 24;
  int density_qubits = 10;
  int unitary_qubits = 12;
  int grover_qubits = 20;

  /// Defaults, with every cap replaced by QSIM_MAX_QUBITS when that variable
  /// is set. Throws Error(InvalidArgument) if the variable is not a
  /// non-negative integer.
  static Capacity from_env();
};

/// Largest number of complex entries a dense matrix or vector may hold.
inline constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 24;

/// Throws Error(CapacityExceeded) when num_qubits > limit.
void check_capacity(int num_qubits, int limit, const char* what);

}  // namespace qsim

#endif  // QSIM_CAPACITY_H_
