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

#ifndef QSIM_HERMITIAN_H_
#define QSIM_HERMITIAN_H_

#include <vector>

#include "qsim/matrix.h"

namespace qsim {

/// Spectral data of a Hermitian matrix: eigenvalues ascending, eigenvectors
/// stored as the matching columns of a unitary matrix.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  /// sum_n a_n v_n v_n^dagger
  ComplexMatrix reconstruct() const;
};

struct JacobiOptions {
  int max_sweeps = 100;
  /// Stop once the off-diagonal Frobenius norm falls below
  /// off_diagonal_tolerance * max(1, ||a||_F).
  double off_diagonal_tolerance = 1e-12;
  double hermitian_tolerance = kDefaultTolerance;
};

/// Cyclic Jacobi eigensolver for complex Hermitian matrices.
/// Throws Error(NotHermitian) or Error(NoConvergence).
EigenDecomposition eig_hermitian(const ComplexMatrix& a, const JacobiOptions& options = {});

/// exp(-i * h * theta) for Hermitian h, via the spectral decomposition.
ComplexMatrix matexp_skew_hermitian(const ComplexMatrix& h, double theta);

}  // namespace qsim

#endif  // QSIM_HERMITIAN_H_
