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

#include "qsim/circuit.h"

#include <string>

#include "qsim/error.h"
#include "qsim/kernels.h"

namespace qsim {
namespace {

// Local gate index of basis index `i`: bits on `wires`, wires[0] most
// significant.
std::size_t local_index(std::size_t i, std::span<const int> wires, int num_qubits) {
  std::size_t s = 0;
  for (int w : wires) {
    s = (s << 1) | ((i & qubit_mask(w, num_qubits)) != 0 ? 1 : 0);
  }
  return s;
}

// Replaces the bits of `i` on `wires` with local index `s`.
std::size_t with_local_index(std::size_t i, std::span<const int> wires, int num_qubits, std::size_t s) {
  std::size_t arity = wires.size();
  for (std::size_t k = 0; k < arity; ++k) {
    std::size_t mask = qubit_mask(wires[k], num_qubits);
    bool bit = (s >> (arity - 1 - k)) & 1;
    i = bit ? (i | mask) : (i & ~mask);
  }
  return i;
}

}  // namespace

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 63) {
    throw Error(ErrorKind::InvalidArgument, "circuit qubit count must be in [1, 63], got " + std::to_string(num_qubits));
  }
}

void validate_wires(const Gate& g, std::span<const int> wires, int num_qubits) {
  if (static_cast<int>(wires.size()) != g.arity) {
    throw Error(ErrorKind::ArityMismatch, g.label + " takes " + std::to_string(g.arity) + " wire(s), got " +
                                              std::to_string(wires.size()));
  }
  for (std::size_t k = 0; k < wires.size(); ++k) {
    if (wires[k] < 0 || wires[k] >= num_qubits) {
      throw Error(ErrorKind::WireOutOfRange, "wire " + std::to_string(wires[k]) + " outside [0, " +
                                                 std::to_string(num_qubits) + ")");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (wires[j] == wires[k]) {
        throw Error(ErrorKind::DuplicateWire, "wire " + std::to_string(wires[k]) + " repeated");
      }
    }
  }
}

Circuit& Circuit::add(GateKind gate, std::vector<int> wires) {
  validate_wires(standard_gate(gate), wires, num_qubits_);
  instructions_.push_back({gate, std::move(wires)});
  return *this;
}

void apply_gate_inplace(std::span<Complex> amps, int num_qubits, const Gate& g, std::span<const int> wires) {
  if (g.arity == 1) {
    kernels::Mat2 m;
    std::copy(g.matrix.data().begin(), g.matrix.data().end(), m.begin());
    kernels::apply_1q(amps, qubit_mask(wires[0], num_qubits), m);
  } else {
    kernels::Mat4 m;
    std::copy(g.matrix.data().begin(), g.matrix.data().end(), m.begin());
    kernels::apply_2q(amps, qubit_mask(wires[0], num_qubits), qubit_mask(wires[1], num_qubits), m);
  }
}

StateVector apply(const Circuit& c, const StateVector& s, const Capacity& cap) {
  if (s.num_qubits() != c.num_qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "circuit has " + std::to_string(c.num_qubits()) +
                                                  " qubits, state has " + std::to_string(s.num_qubits()));
  }
  check_capacity(c.num_qubits(), cap.statevector_qubits, "state-vector simulation");
  std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
  for (const Instruction& inst : c.instructions()) {
    const Gate& g = inst.definition();
    validate_wires(g, inst.wires, c.num_qubits());
    apply_gate_inplace(amps, c.num_qubits(), g, inst.wires);
  }
  return StateVector::adopt(std::move(amps));
}

DensityMatrix apply_density(const Circuit& c, const DensityMatrix& rho, const Capacity& cap) {
  const int n = c.num_qubits();
  if (rho.num_qubits() != n) {
    throw Error(ErrorKind::DimensionMismatch, "circuit has " + std::to_string(n) + " qubits, density matrix has " +
                                                  std::to_string(rho.num_qubits()));
  }
  check_capacity(n, cap.density_qubits, "density-matrix simulation");

  // Row-major rho is a 2n-qubit vector: row qubit q sits on vector qubit q,
  // column qubit q on vector qubit n + q. U acts on rows, conj(U) on columns.
  ComplexMatrix m = rho.matrix();
  std::span<Complex> amps = m.data();
  for (const Instruction& inst : c.instructions()) {
    const Gate& g = inst.definition();
    validate_wires(g, inst.wires, n);
    std::vector<int> column_wires;
    for (int w : inst.wires) {
      column_wires.push_back(n + w);
    }
    Gate conjugate = g;
    for (Complex& z : conjugate.matrix.data()) {
      z = std::conj(z);
    }
    apply_gate_inplace(amps, 2 * n, g, inst.wires);
    apply_gate_inplace(amps, 2 * n, conjugate, column_wires);
  }
  return DensityMatrix::adopt(std::move(m));
}

ComplexMatrix embed(const Gate& g, std::span<const int> wires, int num_qubits) {
  validate_wires(g, wires, num_qubits);
  if (num_qubits > 12) {
    throw Error(ErrorKind::CapacityExceeded, "embed limited to 12 qubits");
  }
  std::size_t d = std::size_t{1} << num_qubits;
  std::size_t local_dim = std::size_t{1} << g.arity;
  ComplexMatrix out(d, d);
  for (std::size_t row = 0; row < d; ++row) {
    std::size_t s = local_index(row, wires, num_qubits);
    for (std::size_t t = 0; t < local_dim; ++t) {
      out(row, with_local_index(row, wires, num_qubits, t)) = g.matrix(s, t);
    }
  }
  return out;
}

ComplexMatrix unitary_of(const Circuit& c, const Capacity& cap) {
  const int n = c.num_qubits();
  check_capacity(n, cap.unitary_qubits, "unitary extraction");
  const std::size_t d = std::size_t{1} << n;
  ComplexMatrix u = ComplexMatrix::identity(d);

  // u <- E u, where row r of E has entries g(s(r), t) at columns
  // with_local_index(r, t). Rows sharing their off-wire bits mix only among
  // themselves, so each such group is rewritten through a small buffer.
  for (const Instruction& inst : c.instructions()) {
    const Gate& g = inst.definition();
    validate_wires(g, inst.wires, n);
    const std::size_t local_dim = std::size_t{1} << g.arity;
    std::vector<Complex> group(local_dim * d);
    for (std::size_t base = 0; base < d; ++base) {
      if (local_index(base, inst.wires, n) != 0) {
        continue;
      }
      std::fill(group.begin(), group.end(), Complex{});
      for (std::size_t s = 0; s < local_dim; ++s) {
        Complex* out_row = group.data() + s * d;
        for (std::size_t t = 0; t < local_dim; ++t) {
          Complex coeff = g.matrix(s, t);
          if (coeff == Complex{}) {
            continue;
          }
          std::size_t src = with_local_index(base, inst.wires, n, t);
          for (std::size_t col = 0; col < d; ++col) {
            out_row[col] += coeff * u(src, col);
          }
        }
      }
      for (std::size_t s = 0; s < local_dim; ++s) {
        std::size_t dst = with_local_index(base, inst.wires, n, s);
        std::copy(group.begin() + s * d, group.begin() + (s + 1) * d, u.data().begin() + dst * d);
      }
    }
  }
  return u;
}

}  // namespace qsim
