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

#ifndef QSIM_ALGORITHMS_H_
#define QSIM_ALGORITHMS_H_

#include <cstdint>

#include "qsim/capacity.h"
#include "qsim/circuit.h"
#include "qsim/matrix.h"
#include "qsim/state.h"

namespace qsim {

/// H on qubit 0, then CNOT with control 0 and target 1.
Circuit bell_circuit();

struct GroverSpec {
  int num_qubits = 2;
  std::uint64_t marked = 0;
  int iterations = 0;
};

struct GroverResult {
  StateVector final_state;
  double success_probability;
};

/// (D O)^k H^n |0...0>, with O the sign flip on the marked amplitude and D
/// the inversion about the mean. Throws Error(InvalidArgument) for
/// num_qubits < 2, an out-of-range marked index or negative iterations, and
/// Error(CapacityExceeded) beyond cap.grover_qubits.
GroverResult grover_run(const GroverSpec& spec, const Capacity& cap = {});

/// sin^2((2k + 1) asin(2^(-n/2)))
double grover_closed_form(int num_qubits, int iterations);

/// round(pi / (4 asin(2^(-n/2))) - 1/2), floored at 0.
int grover_optimal_iterations(int num_qubits);

/// Uniform superposition H^n |0...0>.
StateVector grover_initial_state(int num_qubits);

/// One oracle + diffusion round applied in place to 2^n amplitudes.
void grover_iterate(std::span<Complex> amps, int num_qubits, std::uint64_t marked);

/// Dense operator forms, for small-n checks: diag(1, .., -1 at marked, .., 1)
/// and 2|u><u| - I with |u> the uniform superposition.
ComplexMatrix grover_oracle_matrix(int num_qubits, std::uint64_t marked);
ComplexMatrix grover_diffusion_matrix(int num_qubits);

}  // namespace qsim

#endif  // QSIM_ALGORITHMS_H_
