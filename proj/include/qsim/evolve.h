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

#ifndef QSIM_EVOLVE_H_
#define QSIM_EVOLVE_H_

#include "qsim/matrix.h"
#include "qsim/state.h"

namespace qsim {

/// Time-independent Hermitian Hamiltonian. hbar defaults to natural units.
class Hamiltonian {
 public:
  /// Throws Error(NotHermitian) or Error(InvalidArgument) for hbar <= 0.
  explicit Hamiltonian(ComplexMatrix matrix, double hbar = 1.0);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  double hbar() const noexcept { return hbar_; }

  /// exp(-i H t / hbar)
  ComplexMatrix propagator(double duration) const;

 private:
  ComplexMatrix matrix_;
  double hbar_;
};

struct EvolutionParams {
  double duration = 0.0;
};

/// Closed-system evolution: exp(-i H t / hbar) s.
StateVector evolve(const Hamiltonian& h, EvolutionParams t, const StateVector& s);

/// U rho U^dagger with U = exp(-i H t / hbar).
DensityMatrix evolve_density(const Hamiltonian& h, EvolutionParams t, const DensityMatrix& rho);

}  // namespace qsim

#endif  // QSIM_EVOLVE_H_
