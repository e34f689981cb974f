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

#include "qsim/matrix.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsim/capacity.h"
#include "qsim/error.h"

namespace qsim {
namespace {

std::string shape(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

void check_dense_size(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::InvalidArgument, "matrix dimensions must be positive, got " + shape(rows, cols));
  }
  if (rows > kMaxDenseEntries || cols > kMaxDenseEntries / rows) {
    throw Error(ErrorKind::CapacityExceeded,
                "matrix " + shape(rows, cols) + " exceeds " + std::to_string(kMaxDenseEntries) + " entries");
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(op) + ": " + shape(a.rows(), a.cols()) + " vs " + shape(b.rows(), b.cols()));
  }
}

void require_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw Error(ErrorKind::NotSquare, std::string(op) + ": matrix is " + shape(a.rows(), a.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  check_dense_size(rows, cols);
  data_.assign(rows * cols, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  check_dense_size(rows, cols);
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(data_.size()) + " entries for a " + shape(rows, cols) + " matrix");
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorKind::InvalidArgument, "matrix entries must be finite");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  *this = ComplexMatrix(r, c, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> entries) {
  return ComplexMatrix(entries.size(), 1, std::vector<Complex>(entries.begin(), entries.end()));
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "matmul: " + shape(a.rows(), a.cols()) + " * " + shape(b.rows(), b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Complex aik = a(i, k);
      if (aik == Complex{}) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  std::size_t rows = a.rows() * b.rows();
  std::size_t cols = a.cols() * b.cols();
  check_dense_size(rows, cols);
  ComplexMatrix out(rows, cols);
  for (std::size_t ai = 0; ai < a.rows(); ++ai) {
    for (std::size_t aj = 0; aj < a.cols(); ++aj) {
      Complex s = a(ai, aj);
      for (std::size_t bi = 0; bi < b.rows(); ++bi) {
        for (std::size_t bj = 0; bj < b.cols(); ++bj) {
          out(ai * b.rows() + bi, aj * b.cols() + bj) = s * b(bi, bj);
        }
      }
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = std::conj(a(i, j));
    }
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "add");
  ComplexMatrix out = a;
  auto dst = out.data();
  auto src = b.data();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] += src[i];
  }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "subtract");
  ComplexMatrix out = a;
  auto dst = out.data();
  auto src = b.data();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] -= src[i];
  }
  return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (Complex& z : out.data()) {
    z *= scale;
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  Complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    sum += a(i, i);
  }
  return sum;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  auto x = a.data();
  auto y = b.data();
  for (std::size_t i = 0; i < x.size(); ++i) {
    worst = std::max(worst, std::abs(x[i] - y[i]));
  }
  return worst;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  require_square(a, "is_unitary");
  std::size_t n = a.rows();
  // (a^dagger a)_ij = sum_k conj(a_ki) a_kj
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum{};
      for (std::size_t k = 0; k < n; ++k) {
        sum += std::conj(a(k, i)) * a(k, j);
      }
      if (i == j) {
        sum -= 1.0;
      }
      if (std::abs(sum) > tol) {
        return false;
      }
    }
  }
  return true;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  require_square(a, "is_hermitian");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qsim
