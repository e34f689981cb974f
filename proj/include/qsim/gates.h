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

#ifndef QSIM_GATES_H_
#define QSIM_GATES_H_

#include <span>
#include <string>
#include <string_view>

#include "qsim/matrix.h"
#include "qsim/state.h"

namespace qsim {

enum class GateKind { X, Y, Z, S, T, H, Swap, Cnot };

/// A library gate: label, arity (1 or 2) and its 2^arity unitary matrix.
struct Gate {
  GateKind kind;
  std::string label;
  int arity;
  ComplexMatrix matrix;

  friend bool operator==(const Gate& a, const Gate& b) { return a.kind == b.kind; }
};

/// The closed gate set, in declaration order.
std::span<const GateKind> all_gate_kinds();

const Gate& standard_gate(GateKind kind);

/// Case-insensitive lookup: "X", "h", "SWAP", "cnot", ...
/// Throws Error(UnknownGate).
const Gate& standard_gate(std::string_view label);

/// g.matrix applied to the two-qubit basis ket named by `basis_label`
/// ("00", "01", "10" or "11"). Throws Error(ArityMismatch) for one-qubit
/// gates and Error(InvalidArgument) for a malformed label.
StateVector apply_two_qubit_truth_table(const Gate& g, std::string_view basis_label);

}  // namespace qsim

#endif  // QSIM_GATES_H_
