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

#include "qsim/algorithms.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qsim/error.h"
#include "qsim/gates.h"

namespace qsim {
namespace {

void hadamard_all(std::span<Complex> amps, int num_qubits) {
  const Gate& h = standard_gate(GateKind::H);
  for (int q = 0; q < num_qubits; ++q) {
    int wire[1] = {q};
    apply_gate_inplace(amps, num_qubits, h, wire);
  }
}

void validate(const GroverSpec& spec, const Capacity& cap) {
  if (spec.num_qubits < 2) {
    throw Error(ErrorKind::InvalidArgument, "Grover search needs at least 2 qubits");
  }
  check_capacity(spec.num_qubits, cap.grover_qubits, "Grover search");
  if (spec.marked >= (std::uint64_t{1} << spec.num_qubits)) {
    throw Error(ErrorKind::InvalidArgument, "marked index " + std::to_string(spec.marked) + " out of range");
  }
  if (spec.iterations < 0) {
    throw Error(ErrorKind::InvalidArgument, "iteration count must be non-negative");
  }
}

double grover_angle(int num_qubits) { return std::asin(std::pow(2.0, -0.5 * num_qubits)); }

}  // namespace

Circuit bell_circuit() {
  Circuit c(2);
  c.add(GateKind::H, {0});
  c.add(GateKind::Cnot, {0, 1});
  return c;
}

StateVector grover_initial_state(int num_qubits) {
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  amps[0] = 1.0;
  hadamard_all(amps, num_qubits);
  return StateVector::adopt(std::move(amps));
}

void grover_iterate(std::span<Complex> amps, int num_qubits, std::uint64_t marked) {
  amps[marked] = -amps[marked];
  // H^n (2|0><0| - I) H^n
  hadamard_all(amps, num_qubits);
  for (std::size_t k = 1; k < amps.size(); ++k) {
    amps[k] = -amps[k];
  }
  hadamard_all(amps, num_qubits);
}

GroverResult grover_run(const GroverSpec& spec, const Capacity& cap) {
  validate(spec, cap);
  StateVector start = grover_initial_state(spec.num_qubits);
  std::vector<Complex> amps(start.amplitudes().begin(), start.amplitudes().end());
  for (int k = 0; k < spec.iterations; ++k) {
    grover_iterate(amps, spec.num_qubits, spec.marked);
  }
  double success = std::norm(amps[spec.marked]);
  return {StateVector::adopt(std::move(amps)), success};
}

double grover_closed_form(int num_qubits, int iterations) {
  double s = std::sin((2.0 * iterations + 1.0) * grover_angle(num_qubits));
  return s * s;
}

int grover_optimal_iterations(int num_qubits) {
  if (num_qubits < 1) {
    throw Error(ErrorKind::InvalidArgument, "qubit count must be positive");
  }
  double k = std::round(std::numbers::pi / (4.0 * grover_angle(num_qubits)) - 0.5);
  return k < 0.0 ? 0 : static_cast<int>(k);
}

ComplexMatrix grover_oracle_matrix(int num_qubits, std::uint64_t marked) {
  std::size_t d = std::size_t{1} << num_qubits;
  ComplexMatrix m = ComplexMatrix::identity(d);
  m(marked, marked) = -1.0;
  return m;
}

ComplexMatrix grover_diffusion_matrix(int num_qubits) {
  std::size_t d = std::size_t{1} << num_qubits;
  ComplexMatrix m(d, d);
  double weight = 2.0 / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m(i, j) = weight - (i == j ? 1.0 : 0.0);
    }
  }
  return m;
}

}  // namespace qsim
