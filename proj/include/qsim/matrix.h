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

#ifndef QSIM_MATRIX_H_
#define QSIM_MATRIX_H_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qsim {

using Complex = std::complex<double>;

/// Default absolute tolerance for max-norm comparisons.
inline constexpr double kDefaultTolerance = 1e-10;

/// Dense row-major complex matrix. Values are immutable once shared; all
/// operations below return new matrices.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// rows x cols zero matrix. Throws Error(InvalidArgument) on a zero
  /// dimension and Error(CapacityExceeded) beyond kMaxDenseEntries.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major entries. Throws Error(DimensionMismatch)
  /// when entries.size() != rows * cols and Error(InvalidArgument) on
  /// non-finite entries.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Row-major literal: ComplexMatrix{{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Column vector from entries.
  static ComplexMatrix column(std::span<const Complex> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);

/// max |a_ij - b_ij|; throws Error(DimensionMismatch) on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max-norm of (a^dagger a - I) <= tol. Throws Error(NotSquare).
bool is_unitary(const ComplexMatrix& a, double tol = kDefaultTolerance);

/// max-norm of (a - a^dagger) <= tol. Throws Error(NotSquare).
bool is_hermitian(const ComplexMatrix& a, double tol = kDefaultTolerance);

}  // namespace qsim

#endif  // QSIM_MATRIX_H_
