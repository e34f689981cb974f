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

#include "qsim/state.h"

#include <bit>
#include <cmath>
#include <string>

#include "qsim/capacity.h"
#include "qsim/error.h"
#include "qsim/hermitian.h"

namespace qsim {
namespace {

constexpr double kNormTolerance = 1e-10;

int qubits_for_dimension(std::size_t dimension) {
  if (dimension == 0 || !std::has_single_bit(dimension)) {
    throw Error(ErrorKind::NotPowerOfTwo, "dimension " + std::to_string(dimension) + " is not a power of two");
  }
  if (dimension > kMaxDenseEntries) {
    throw Error(ErrorKind::CapacityExceeded, "dimension " + std::to_string(dimension) + " exceeds capacity");
  }
  return std::countr_zero(dimension);
}

double squared_norm(std::span<const Complex> amps) {
  double sum = 0.0;
  for (const Complex& a : amps) {
    sum += std::norm(a);
  }
  return sum;
}

}  // namespace

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  int n = qubits_for_dimension(amplitudes.size());
  for (const Complex& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw Error(ErrorKind::NotNormalized, "amplitudes must be finite");
    }
  }
  double deviation = std::abs(squared_norm(amplitudes) - 1.0);
  if (deviation > kNormTolerance) {
    throw Error(ErrorKind::NotNormalized,
                "sum of squared magnitudes deviates from 1 by " + std::to_string(deviation));
  }
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::normalize(std::vector<Complex> amplitudes) {
  int n = qubits_for_dimension(amplitudes.size());
  double norm = std::sqrt(squared_norm(amplitudes));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorKind::NotNormalized, "cannot normalize a zero or non-finite vector");
  }
  for (Complex& a : amplitudes) {
    a /= norm;
  }
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  if (num_qubits < 0 || num_qubits > 63) {
    throw Error(ErrorKind::InvalidArgument, "qubit count out of range");
  }
  std::size_t dimension = std::size_t{1} << num_qubits;
  qubits_for_dimension(dimension);
  if (index >= dimension) {
    throw Error(ErrorKind::InvalidArgument,
                "basis index " + std::to_string(index) + " out of range for " + std::to_string(num_qubits) +
                    " qubits");
  }
  std::vector<Complex> amps(dimension);
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_label(std::string_view bits) {
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::InvalidArgument, "ket label must contain only 0 and 1");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return basis(static_cast<int>(bits.size()), index);
}

StateVector StateVector::adopt(std::vector<Complex> amplitudes) {
  int n = qubits_for_dimension(amplitudes.size());
  return StateVector(n, std::move(amplitudes));
}

double StateVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "inner_product: " + std::to_string(a.num_qubits()) + " vs " +
                                                  std::to_string(b.num_qubits()) + " qubits");
  }
  Complex sum{};
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    sum += std::conj(a[k]) * b[k];
  }
  return sum;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "max_abs_diff: state dimensions differ");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    worst = std::max(worst, std::abs(a[k] - b[k]));
  }
  return worst;
}

StateVector kron_state(const StateVector& a, const StateVector& b) {
  std::size_t dimension = a.dimension() * b.dimension();
  qubits_for_dimension(dimension);
  std::vector<Complex> amps(dimension);
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < b.dimension(); ++j) {
      amps[i * b.dimension() + j] = a[i] * b[j];
    }
  }
  return StateVector::adopt(std::move(amps));
}

bool satisfies_density_invariants(const ComplexMatrix& m, double tol, double eigenvalue_floor) {
  if (!m.is_square() || !std::has_single_bit(m.rows())) {
    return false;
  }
  if (!is_hermitian(m, tol)) {
    return false;
  }
  if (std::abs(trace(m) - 1.0) > tol) {
    return false;
  }
  EigenDecomposition eig = eig_hermitian(m);
  return eig.eigenvalues.front() >= eigenvalue_floor;
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix matrix) {
  if (!matrix.is_square()) {
    throw Error(ErrorKind::NotSquare, "density matrix must be square");
  }
  int n = qubits_for_dimension(matrix.rows());
  if (!is_hermitian(matrix, kDefaultTolerance)) {
    throw Error(ErrorKind::NotDensityMatrix, "density matrix must be Hermitian");
  }
  if (std::abs(trace(matrix) - 1.0) > kDefaultTolerance) {
    throw Error(ErrorKind::NotDensityMatrix, "density matrix must have unit trace");
  }
  EigenDecomposition eig = eig_hermitian(matrix);
  if (eig.eigenvalues.front() < -1e-9) {
    throw Error(ErrorKind::NotDensityMatrix,
                "density matrix has negative eigenvalue " + std::to_string(eig.eigenvalues.front()));
  }
  return DensityMatrix(n, std::move(matrix));
}

DensityMatrix DensityMatrix::adopt(ComplexMatrix matrix) {
  if (!matrix.is_square()) {
    throw Error(ErrorKind::NotSquare, "density matrix must be square");
  }
  int n = qubits_for_dimension(matrix.rows());
  return DensityMatrix(n, std::move(matrix));
}

DensityMatrix to_density(const StateVector& s) {
  std::size_t d = s.dimension();
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m(i, j) = s[i] * std::conj(s[j]);
    }
  }
  return DensityMatrix::adopt(std::move(m));
}

DensityMatrix from_ensemble(const MixedEnsemble& ensemble) {
  if (ensemble.empty()) {
    throw Error(ErrorKind::ProbabilitiesInvalid, "ensemble is empty");
  }
  double total = 0.0;
  for (const EnsembleEntry& entry : ensemble) {
    if (!(entry.probability >= 0.0 && entry.probability <= 1.0)) {
      throw Error(ErrorKind::ProbabilitiesInvalid,
                  "probability " + std::to_string(entry.probability) + " outside [0, 1]");
    }
    if (entry.state.num_qubits() != ensemble.front().state.num_qubits()) {
      throw Error(ErrorKind::DimensionMismatch, "ensemble states have different qubit counts");
    }
    total += entry.probability;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw Error(ErrorKind::ProbabilitiesInvalid, "probabilities sum to " + std::to_string(total));
  }

  std::size_t d = ensemble.front().state.dimension();
  ComplexMatrix m(d, d);
  for (const EnsembleEntry& entry : ensemble) {
    const StateVector& s = entry.state;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        m(i, j) += entry.probability * (s[i] * std::conj(s[j]));
      }
    }
  }
  return DensityMatrix::adopt(std::move(m));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum_ij rho_ij rho_ji = sum_ij |rho_ij|^2 for Hermitian rho.
  double sum = 0.0;
  for (const Complex& z : rho.matrix().data()) {
    sum += std::norm(z);
  }
  return sum;
}

DensityMatrix dephase(const DensityMatrix& rho) {
  std::size_t d = rho.dimension();
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = rho(i, i);
  }
  return DensityMatrix::adopt(std::move(m));
}

}  // namespace qsim
