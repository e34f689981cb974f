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

#include "qsim/entangle.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsim/error.h"
#include "qsim/hermitian.h"

namespace qsim {
namespace {

constexpr double kEigenvalueClamp = 1e-12;

std::vector<int> validated_subset(std::span<const int> qubits, int num_qubits) {
  std::vector<int> sorted(qubits.begin(), qubits.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) {
    throw Error(ErrorKind::InvalidSubsystem, "subsystem is empty");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::InvalidSubsystem, "subsystem repeats a qubit");
  }
  if (sorted.front() < 0 || sorted.back() >= num_qubits) {
    throw Error(ErrorKind::InvalidSubsystem, "subsystem qubit outside [0, " + std::to_string(num_qubits) + ")");
  }
  if (static_cast<int>(sorted.size()) == num_qubits) {
    throw Error(ErrorKind::InvalidSubsystem, "subsystem must be a strict subset of the qubits");
  }
  return sorted;
}

std::vector<int> complement(const std::vector<int>& sorted, int num_qubits) {
  std::vector<int> out;
  for (int q = 0; q < num_qubits; ++q) {
    if (!std::binary_search(sorted.begin(), sorted.end(), q)) {
      out.push_back(q);
    }
  }
  return out;
}

// offsets[k] = full-register index bits of local index k over `qubits`,
// with qubits[0] as the local most significant bit.
std::vector<std::size_t> local_offsets(const std::vector<int>& qubits, int num_qubits) {
  std::size_t count = std::size_t{1} << qubits.size();
  std::vector<std::size_t> offsets(count, 0);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t b = 0; b < qubits.size(); ++b) {
      if ((k >> (qubits.size() - 1 - b)) & 1) {
        offsets[k] |= qubit_mask(qubits[b], num_qubits);
      }
    }
  }
  return offsets;
}

}  // namespace

Bipartition::Bipartition(std::vector<int> subsystem_a, int num_qubits)
    : a_(validated_subset(subsystem_a, num_qubits)), b_(complement(a_, num_qubits)), num_qubits_(num_qubits) {}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.num_qubits();
  std::vector<int> kept = validated_subset(keep, n);
  std::vector<int> traced = complement(kept, n);
  std::vector<std::size_t> kept_offsets = local_offsets(kept, n);
  std::vector<std::size_t> traced_offsets = local_offsets(traced, n);

  const std::size_t d = kept_offsets.size();
  ComplexMatrix out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      Complex sum{};
      for (std::size_t e : traced_offsets) {
        sum += rho(kept_offsets[r] | e, kept_offsets[c] | e);
      }
      out(r, c) = sum;
    }
  }
  return DensityMatrix::adopt(std::move(out));
}

DensityMatrix reduced_density(const StateVector& s, std::span<const int> keep) {
  const int n = s.num_qubits();
  std::vector<int> kept = validated_subset(keep, n);
  std::vector<int> traced = complement(kept, n);
  std::vector<std::size_t> kept_offsets = local_offsets(kept, n);
  std::vector<std::size_t> traced_offsets = local_offsets(traced, n);

  // rho_A = M M^dagger with M(r, e) = s[kept(r) | traced(e)].
  const std::size_t d = kept_offsets.size();
  ComplexMatrix out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = r; c < d; ++c) {
      Complex sum{};
      for (std::size_t e : traced_offsets) {
        sum += s[kept_offsets[r] | e] * std::conj(s[kept_offsets[c] | e]);
      }
      out(r, c) = sum;
      out(c, r) = std::conj(sum);
    }
  }
  return DensityMatrix::adopt(std::move(out));
}

double entanglement_entropy(const StateVector& s, const Bipartition& part) {
  if (part.num_qubits() != s.num_qubits()) {
    throw Error(ErrorKind::InvalidSubsystem, "bipartition and state disagree on qubit count");
  }
  DensityMatrix reduced = reduced_density(s, part.subsystem_a());
  EigenDecomposition eig = eig_hermitian(reduced.matrix());
  double entropy = 0.0;
  for (double lambda : eig.eigenvalues) {
    if (lambda > kEigenvalueClamp) {
      entropy -= lambda * std::log2(lambda);
    }
  }
  return std::max(0.0, entropy);
}

bool is_entangled(const StateVector& s, const Bipartition& part, double tol) {
  if (part.num_qubits() != s.num_qubits()) {
    throw Error(ErrorKind::InvalidSubsystem, "bipartition and state disagree on qubit count");
  }
  return purity(reduced_density(s, part.subsystem_a())) < 1.0 - tol;
}

}  // namespace qsim
