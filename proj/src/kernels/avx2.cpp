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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels_impl.h"

namespace qsim::kernels::avx2 {
namespace {

inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }
inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }

// Lane-wise complex product of two packed pairs [x0, x1] * [c0, c1].
inline __m256d cmul(__m256d x, __m256d c) {
  __m256d c_re = _mm256_movedup_pd(c);
  __m256d c_im = _mm256_permute_pd(c, 0xF);
  __m256d x_swapped = _mm256_permute_pd(x, 0x5);
  return _mm256_fmaddsub_pd(x, c_re, _mm256_mul_pd(x_swapped, c_im));
}

inline __m256d broadcast(const Complex& z) {
  return _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(&z));
}

inline __m256d pack(const Complex& lo, const Complex& hi) {
  return _mm256_setr_pd(lo.real(), lo.imag(), hi.real(), hi.imag());
}

}  // namespace

void apply_1q(Complex* amps, std::size_t size, std::size_t mask, const Complex* m) {
  if (mask == 1) {
    // Pairs are adjacent: one register holds [a0, a1].
    const __m256d col0 = pack(m[0], m[2]);
    const __m256d col1 = pack(m[1], m[3]);
    for (std::size_t i = 0; i < size; i += 2) {
      __m256d v = _mm256_loadu_pd(as_doubles(amps + i));
      __m256d a0 = _mm256_permute2f128_pd(v, v, 0x00);
      __m256d a1 = _mm256_permute2f128_pd(v, v, 0x11);
      __m256d r = _mm256_add_pd(cmul(a0, col0), cmul(a1, col1));
      _mm256_storeu_pd(as_doubles(amps + i), r);
    }
    return;
  }
  const __m256d m00 = broadcast(m[0]);
  const __m256d m01 = broadcast(m[1]);
  const __m256d m10 = broadcast(m[2]);
  const __m256d m11 = broadcast(m[3]);
  for (std::size_t base = 0; base < size; base += 2 * mask) {
    for (std::size_t i = base; i < base + mask; i += 2) {
      __m256d a0 = _mm256_loadu_pd(as_doubles(amps + i));
      __m256d a1 = _mm256_loadu_pd(as_doubles(amps + i + mask));
      __m256d r0 = _mm256_add_pd(cmul(a0, m00), cmul(a1, m01));
      __m256d r1 = _mm256_add_pd(cmul(a0, m10), cmul(a1, m11));
      _mm256_storeu_pd(as_doubles(amps + i), r0);
      _mm256_storeu_pd(as_doubles(amps + i + mask), r1);
    }
  }
}

void apply_2q(Complex* amps, std::size_t size, std::size_t mask_first, std::size_t mask_second,
              const Complex* m) {
  const std::size_t lo = mask_first < mask_second ? mask_first : mask_second;
  const std::size_t hi = mask_first < mask_second ? mask_second : mask_first;
  const std::size_t offsets[4] = {0, mask_second, mask_first, mask_first | mask_second};
  // upper[c] = [m(0,c), m(1,c)], lower[c] = [m(2,c), m(3,c)]
  __m256d upper[4];
  __m256d lower[4];
  for (int c = 0; c < 4; ++c) {
    upper[c] = pack(m[c], m[4 + c]);
    lower[c] = pack(m[8 + c], m[12 + c]);
  }
  for (std::size_t k = 0; k < size / 4; ++k) {
    std::size_t base = insert_two_zero_bits(k, lo, hi);
    __m256d r01 = _mm256_setzero_pd();
    __m256d r23 = _mm256_setzero_pd();
    for (int c = 0; c < 4; ++c) {
      __m256d a = broadcast(amps[base + offsets[c]]);
      r01 = _mm256_add_pd(r01, cmul(a, upper[c]));
      r23 = _mm256_add_pd(r23, cmul(a, lower[c]));
    }
    _mm_storeu_pd(as_doubles(amps + base + offsets[0]), _mm256_castpd256_pd128(r01));
    _mm_storeu_pd(as_doubles(amps + base + offsets[1]), _mm256_extractf128_pd(r01, 1));
    _mm_storeu_pd(as_doubles(amps + base + offsets[2]), _mm256_castpd256_pd128(r23));
    _mm_storeu_pd(as_doubles(amps + base + offsets[3]), _mm256_extractf128_pd(r23, 1));
  }
}

void abs2(const Complex* amps, std::size_t size, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= size; i += 4) {
    __m256d a = _mm256_loadu_pd(as_doubles(amps + i));
    __m256d b = _mm256_loadu_pd(as_doubles(amps + i + 2));
    // [|a0|^2, |b0|^2, |a1|^2, |b1|^2] -> [|a0|^2, |a1|^2, |b0|^2, |b1|^2]
    __m256d sums = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(sums, 0xD8));
  }
  for (; i < size; ++i) {
    double re = amps[i].real();
    double im = amps[i].imag();
    out[i] = re * re + im * im;
  }
}

}  // namespace qsim::kernels::avx2
