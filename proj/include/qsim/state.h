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

#ifndef QSIM_STATE_H_
#define QSIM_STATE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qsim/matrix.h"

namespace qsim {

// Qubit ordering: qubit 0 is the leftmost symbol of a ket and the most
// significant bit of the basis index, so |q0 q1 ... q(n-1)> has index
// sum_k q_k * 2^(n-1-k).

/// Index bit carrying qubit `qubit` of an n-qubit register.
constexpr std::size_t qubit_mask(int qubit, int num_qubits) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

/// Normalized pure state over 2^n computational basis states.
class StateVector {
 public:
  /// Stores the amplitudes verbatim. Throws Error(NotPowerOfTwo) or
  /// Error(NotNormalized) when |sum |a_k|^2 - 1| > 1e-10.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  /// Scales the amplitudes to unit norm. Throws Error(NotNormalized) on a
  /// zero vector.
  static StateVector normalize(std::vector<Complex> amplitudes);

  /// Computational basis state |index> on n qubits.
  static StateVector basis(int num_qubits, std::uint64_t index);

  /// Basis state from a ket label such as "01" (qubit 0 first).
  static StateVector from_label(std::string_view bits);

  /// No validation. For kernels whose output is normalized by construction.
  static StateVector adopt(std::vector<Complex> amplitudes);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t k) const { return amplitudes_[k]; }

  double norm() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  StateVector(int num_qubits, std::vector<Complex> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

  int num_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

/// <a|b> = sum conj(a_k) b_k. Throws Error(DimensionMismatch).
Complex inner_product(const StateVector& a, const StateVector& b);

/// max_k |a_k - b_k|
double max_abs_diff(const StateVector& a, const StateVector& b);

/// a (x) b with a's qubits first.
StateVector kron_state(const StateVector& a, const StateVector& b);

/// Hermitian, unit-trace, positive semidefinite 2^n x 2^n matrix.
class DensityMatrix {
 public:
  /// Validates every invariant: Hermitian and unit trace within 1e-10,
  /// eigenvalues >= -1e-9. Throws Error(NotDensityMatrix) (or
  /// NotPowerOfTwo / NotSquare for the wrong shape).
  static DensityMatrix from_matrix(ComplexMatrix matrix);

  /// No validation. For operations that preserve the invariants by
  /// construction.
  static DensityMatrix adopt(ComplexMatrix matrix);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Complex operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  DensityMatrix(int num_qubits, ComplexMatrix matrix)
      : num_qubits_(num_qubits), matrix_(std::move(matrix)) {}

  int num_qubits_ = 0;
  ComplexMatrix matrix_;
};

struct EnsembleEntry {
  double probability;
  StateVector state;
};

/// Probability-weighted set of pure states.
using MixedEnsemble = std::vector<EnsembleEntry>;

/// |s><s|
DensityMatrix to_density(const StateVector& s);

/// sum p_i |psi_i><psi_i|. Throws Error(ProbabilitiesInvalid) when any p_i
/// lies outside [0, 1] or the sum deviates from 1 by more than 1e-10, and
/// Error(DimensionMismatch) for mixed qubit counts.
DensityMatrix from_ensemble(const MixedEnsemble& ensemble);

/// Tr(rho^2)
double purity(const DensityMatrix& rho);

/// Zeroes all off-diagonal entries.
DensityMatrix dephase(const DensityMatrix& rho);

/// Checks the invariants of an arbitrary matrix without constructing a
/// DensityMatrix. Returns false instead of throwing.
bool satisfies_density_invariants(const ComplexMatrix& m, double tol = kDefaultTolerance,
                                  double eigenvalue_floor = -1e-9);

}  // namespace qsim

#endif  // QSIM_STATE_H_
