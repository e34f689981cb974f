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

#ifndef QSIM_OBSERVABLES_H_
#define QSIM_OBSERVABLES_H_

#include <string>

#include "qsim/matrix.h"
#include "qsim/state.h"

namespace qsim {

/// A Hermitian operator with a display label.
class Observable {
 public:
  /// Throws Error(NotHermitian) (or NotSquare) when the matrix is not
  /// Hermitian within 1e-10.
  Observable(std::string label, ComplexMatrix matrix);

  /// Library gate matrix as an observable (X, Y, Z, H, SWAP, CNOT).
  static Observable from_gate(std::string_view label);

  const std::string& label() const noexcept { return label_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dimension() const noexcept { return matrix_.rows(); }

 private:
  std::string label_;
  ComplexMatrix matrix_;
};

/// <s|A|s>. Throws Error(DimensionMismatch).
double expectation(const Observable& a, const StateVector& s);

/// Re Tr(rho A).
double expectation_density(const Observable& a, const DensityMatrix& rho);

/// AB - BA
ComplexMatrix commutator(const Observable& a, const Observable& b);

/// <A^2> - <A>^2
double variance(const Observable& a, const StateVector& s);

struct RobertsonResult {
  double lhs;  // sigma_A * sigma_B
  double rhs;  // |<[A, B]>| / 2
  bool holds;  // lhs >= rhs - 1e-9
};

RobertsonResult robertson_check(const Observable& a, const Observable& b, const StateVector& s);

}  // namespace qsim

#endif  // QSIM_OBSERVABLES_H_
