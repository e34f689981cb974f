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

#include "qsim/evolve.h"

#include <cmath>
#include <string>

#include "qsim/error.h"
#include "qsim/hermitian.h"

namespace qsim {

Hamiltonian::Hamiltonian(ComplexMatrix matrix, double hbar) : matrix_(std::move(matrix)), hbar_(hbar) {
  if (!is_hermitian(matrix_, kDefaultTolerance)) {
    throw Error(ErrorKind::NotHermitian, "Hamiltonian must be Hermitian");
  }
  if (!(hbar_ > 0.0) || !std::isfinite(hbar_)) {
    throw Error(ErrorKind::InvalidArgument, "hbar must be positive and finite");
  }
}

ComplexMatrix Hamiltonian::propagator(double duration) const {
  if (!std::isfinite(duration)) {
    throw Error(ErrorKind::InvalidArgument, "evolution duration must be finite");
  }
  return matexp_skew_hermitian(matrix_, duration / hbar_);
}

StateVector evolve(const Hamiltonian& h, EvolutionParams t, const StateVector& s) {
  if (h.matrix().rows() != s.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "Hamiltonian dimension " + std::to_string(h.matrix().rows()) +
                                                  " vs state dimension " + std::to_string(s.dimension()));
  }
  ComplexMatrix u = h.propagator(t.duration);
  std::vector<Complex> out(s.dimension());
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    for (std::size_t j = 0; j < s.dimension(); ++j) {
      out[i] += u(i, j) * s[j];
    }
  }
  return StateVector::adopt(std::move(out));
}

DensityMatrix evolve_density(const Hamiltonian& h, EvolutionParams t, const DensityMatrix& rho) {
  if (h.matrix().rows() != rho.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "Hamiltonian dimension " + std::to_string(h.matrix().rows()) +
                                                  " vs density dimension " + std::to_string(rho.dimension()));
  }
  ComplexMatrix u = h.propagator(t.duration);
  return DensityMatrix::adopt(matmul(matmul(u, rho.matrix()), adjoint(u)));
}

}  // namespace qsim
