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

#include "qsim/observables.h"

#include <algorithm>
#include <cmath>

#include "qsim/error.h"
#include "qsim/gates.h"

namespace qsim {
namespace {

constexpr double kImaginaryTolerance = 1e-10;

void require_dimension(const Observable& a, std::size_t dimension, const char* op) {
  if (a.dimension() != dimension) {
    throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": observable " + a.label() + " has dimension " +
                                                  std::to_string(a.dimension()) + ", operand " +
                                                  std::to_string(dimension));
  }
}

// <s|M|s> without forming M|s> as a matrix.
Complex quadratic_form(const ComplexMatrix& m, const StateVector& s) {
  Complex sum{};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex row{};
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row += m(i, j) * s[j];
    }
    sum += std::conj(s[i]) * row;
  }
  return sum;
}

}  // namespace

Observable::Observable(std::string label, ComplexMatrix matrix) : label_(std::move(label)), matrix_(std::move(matrix)) {
  if (!is_hermitian(matrix_, kDefaultTolerance)) {
    throw Error(ErrorKind::NotHermitian, "observable " + label_ + " is not Hermitian");
  }
}

Observable Observable::from_gate(std::string_view label) {
  const Gate& g = standard_gate(label);
  return Observable(g.label, g.matrix);
}

double expectation(const Observable& a, const StateVector& s) {
  require_dimension(a, s.dimension(), "expectation");
  Complex value = quadratic_form(a.matrix(), s);
  // Hermitian forms are real; a large imaginary part means corrupted input.
  if (std::abs(value.imag()) >= kImaginaryTolerance * std::max(1.0, std::abs(value))) {
    throw Error(ErrorKind::NotHermitian, "expectation value has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

double expectation_density(const Observable& a, const DensityMatrix& rho) {
  require_dimension(a, rho.dimension(), "expectation_density");
  // Tr(rho A) = sum_ij rho_ij A_ji
  Complex sum{};
  for (std::size_t i = 0; i < rho.dimension(); ++i) {
    for (std::size_t j = 0; j < rho.dimension(); ++j) {
      sum += rho(i, j) * a.matrix()(j, i);
    }
  }
  return sum.real();
}

ComplexMatrix commutator(const Observable& a, const Observable& b) {
  require_dimension(a, b.dimension(), "commutator");
  return matmul(a.matrix(), b.matrix()) - matmul(b.matrix(), a.matrix());
}

double variance(const Observable& a, const StateVector& s) {
  require_dimension(a, s.dimension(), "variance");
  // <A^2> = || A s ||^2 for Hermitian A.
  double second_moment = 0.0;
  Complex first{};
  const ComplexMatrix& m = a.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex row{};
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row += m(i, j) * s[j];
    }
    second_moment += std::norm(row);
    first += std::conj(s[i]) * row;
  }
  return second_moment - first.real() * first.real();
}

RobertsonResult robertson_check(const Observable& a, const Observable& b, const StateVector& s) {
  require_dimension(a, s.dimension(), "robertson_check");
  require_dimension(b, s.dimension(), "robertson_check");
  double lhs = std::sqrt(std::max(0.0, variance(a, s))) * std::sqrt(std::max(0.0, variance(b, s)));
  double rhs = 0.5 * std::abs(quadratic_form(commutator(a, b), s));
  return {lhs, rhs, lhs >= rhs - 1e-9};
}

}  // namespace qsim
