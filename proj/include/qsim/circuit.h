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

#ifndef QSIM_CIRCUIT_H_
#define QSIM_CIRCUIT_H_

#include <initializer_list>
#include <span>
#include <vector>

#include "qsim/capacity.h"
#include "qsim/gates.h"
#include "qsim/matrix.h"
#include "qsim/state.h"

namespace qsim {

/// One gate on an ordered wire list. For CNOT, wires[0] is the control and
/// wires[1] the target.
struct Instruction {
  GateKind gate;
  std::vector<int> wires;

  const Gate& definition() const { return standard_gate(gate); }

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

class Circuit {
 public:
  /// Throws Error(InvalidArgument) unless num_qubits >= 1.
  explicit Circuit(int num_qubits);

  /// Appends an instruction. Throws Error(ArityMismatch),
  /// Error(WireOutOfRange) or Error(DuplicateWire).
  Circuit& add(GateKind gate, std::vector<int> wires);
  Circuit& add(GateKind gate, std::initializer_list<int> wires) {
    return add(gate, std::vector<int>(wires));
  }

  int num_qubits() const noexcept { return num_qubits_; }
  std::span<const Instruction> instructions() const noexcept { return instructions_; }
  bool empty() const noexcept { return instructions_.empty(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_;
  std::vector<Instruction> instructions_;
};

/// Throws Error(WireOutOfRange), Error(DuplicateWire) or
/// Error(ArityMismatch) when `wires` cannot carry `g` on n qubits.
void validate_wires(const Gate& g, std::span<const int> wires, int num_qubits);

/// In-place stride-kernel application of one gate to a raw amplitude array
/// of 2^num_qubits entries. Wires must already be validated.
void apply_gate_inplace(std::span<Complex> amps, int num_qubits, const Gate& g, std::span<const int> wires);

/// Runs the circuit on a state vector with the stride kernels.
StateVector apply(const Circuit& c, const StateVector& s, const Capacity& cap = {});

/// rho -> U rho U^dagger, instruction by instruction.
DensityMatrix apply_density(const Circuit& c, const DensityMatrix& rho, const Capacity& cap = {});

/// 2^n x 2^n matrix acting as g on `wires` (in listed order) and as the
/// identity elsewhere. Built entry by entry from the basis-index rule.
ComplexMatrix embed(const Gate& g, std::span<const int> wires, int num_qubits);
inline ComplexMatrix embed(const Gate& g, std::initializer_list<int> wires, int num_qubits) {
  return embed(g, std::span<const int>(wires.begin(), wires.size()), num_qubits);
}

/// Product of the embedded instruction unitaries, last instruction
/// leftmost. Independent of the stride kernels; used as their oracle.
ComplexMatrix unitary_of(const Circuit& c, const Capacity& cap = {});

}  // namespace qsim

#endif  // QSIM_CIRCUIT_H_
