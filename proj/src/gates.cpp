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

#include "qsim/gates.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>

#include "qsim/error.h"

namespace qsim {
namespace {

constexpr std::array<GateKind, 8> kKinds = {GateKind::X, GateKind::Y,    GateKind::Z,   GateKind::S,
                                            GateKind::T, GateKind::H, GateKind::Swap, GateKind::Cnot};

std::array<Gate, 8> build_library() {
  const Complex i{0.0, 1.0};
  const double r = 1.0 / std::numbers::sqrt2;
  return {{
      {GateKind::X, "X", 1, ComplexMatrix{{0, 1}, {1, 0}}},
      {GateKind::Y, "Y", 1, ComplexMatrix{{0, -i}, {i, 0}}},
      {GateKind::Z, "Z", 1, ComplexMatrix{{1, 0}, {0, -1}}},
      {GateKind::S, "S", 1, ComplexMatrix{{1, 0}, {0, i}}},
      {GateKind::T, "T", 1, ComplexMatrix{{1, 0}, {0, std::polar(1.0, std::numbers::pi / 4)}}},
      {GateKind::H, "H", 1, ComplexMatrix{{r, r}, {r, -r}}},
      {GateKind::Swap, "SWAP", 2,
       ComplexMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}},
      {GateKind::Cnot, "CNOT", 2,
       ComplexMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}},
  }};
}

const std::array<Gate, 8>& library() {
  static const std::array<Gate, 8> gates = build_library();
  return gates;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::toupper(static_cast<unsigned char>(x)) == std::toupper(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::span<const GateKind> all_gate_kinds() { return kKinds; }

const Gate& standard_gate(GateKind kind) { return library()[static_cast<std::size_t>(kind)]; }

const Gate& standard_gate(std::string_view label) {
  for (const Gate& g : library()) {
    if (iequals(g.label, label)) {
      return g;
    }
  }
  throw Error(ErrorKind::UnknownGate, "no gate named '" + std::string(label) + "'");
}

StateVector apply_two_qubit_truth_table(const Gate& g, std::string_view basis_label) {
  if (g.arity != 2) {
    throw Error(ErrorKind::ArityMismatch, g.label + " is not a two-qubit gate");
  }
  if (basis_label.size() != 2) {
    throw Error(ErrorKind::InvalidArgument, "expected a two-bit ket label");
  }
  StateVector in = StateVector::from_label(basis_label);
  std::vector<Complex> out(4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      out[r] += g.matrix(r, c) * in[c];
    }
  }
  return StateVector::adopt(std::move(out));
}

}  // namespace qsim
