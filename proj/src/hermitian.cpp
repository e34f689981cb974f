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

#include "qsim/hermitian.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsim/error.h"

namespace qsim {
namespace {

double frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.data()) {
    sum += std::norm(z);
  }
  return std::sqrt(sum);
}

double off_diagonal_frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) {
        sum += std::norm(a(i, j));
      }
    }
  }
  return std::sqrt(sum);
}

// Zeroes a(p, q) with the unitary J = D * G acting on columns p, q, where
// D = diag(1, e^{-i phi}) removes the phase of a(p, q) and G is the real
// rotation [[c, s], [-s, c]]. Updates a <- J^dagger a J and v <- v J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  Complex apq = a(p, q);
  double magnitude = std::abs(apq);
  Complex phase = apq / magnitude;  // e^{i phi}
  Complex phase_conj = std::conj(phase);

  double app = a(p, p).real();
  double aqq = a(q, q).real();
  double zeta = (aqq - app) / (2.0 * magnitude);
  double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  double c = 1.0 / std::sqrt(1.0 + t * t);
  double s = t * c;

  std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    Complex akp = a(k, p);
    Complex akq = a(k, q);
    a(k, p) = c * akp - s * phase_conj * akq;
    a(k, q) = s * akp + c * phase_conj * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    Complex apk = a(p, k);
    Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * magnitude;
  a(q, q) = aqq + t * magnitude;

  for (std::size_t k = 0; k < n; ++k) {
    Complex vkp = v(k, p);
    Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * phase_conj * vkq;
    v(k, q) = s * vkp + c * phase_conj * vkq;
  }
}

}  // namespace

ComplexMatrix EigenDecomposition::reconstruct() const {
  std::size_t n = eigenvalues.size();
  ComplexMatrix out(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex left = eigenvalues[m] * eigenvectors(i, m);
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += left * std::conj(eigenvectors(j, m));
      }
    }
  }
  return out;
}

EigenDecomposition eig_hermitian(const ComplexMatrix& input, const JacobiOptions& options) {
  if (!is_hermitian(input, options.hermitian_tolerance)) {
    throw Error(ErrorKind::NotHermitian, "eig_hermitian requires a Hermitian matrix");
  }
  std::size_t n = input.rows();

  // Work on the exactly Hermitian part so roundoff asymmetry in the input
  // cannot stall convergence.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      Complex upper = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a(i, j) = upper;
      a(j, i) = std::conj(upper);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  double threshold = options.off_diagonal_tolerance * std::max(1.0, frobenius(a));
  bool converged = off_diagonal_frobenius(a) <= threshold;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) > 1e-300) {
          rotate(a, v, p, q);
        }
      }
    }
    converged = off_diagonal_frobenius(a) <= threshold;
  }
  if (!converged) {
    throw Error(ErrorKind::NoConvergence,
                "Jacobi iteration did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition result;
  result.eigenvalues.reserve(n);
  result.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    result.eigenvalues.push_back(a(order[m], order[m]).real());
    for (std::size_t i = 0; i < n; ++i) {
      result.eigenvectors(i, m) = v(i, order[m]);
    }
  }
  return result;
}

ComplexMatrix matexp_skew_hermitian(const ComplexMatrix& h, double theta) {
  EigenDecomposition eig = eig_hermitian(h);
  std::size_t n = h.rows();
  ComplexMatrix out(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    Complex factor = std::polar(1.0, -eig.eigenvalues[m] * theta);
    for (std::size_t i = 0; i < n; ++i) {
      Complex left = factor * eig.eigenvectors(i, m);
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += left * std::conj(eig.eigenvectors(j, m));
      }
    }
  }
  return out;
}

}  // namespace qsim
