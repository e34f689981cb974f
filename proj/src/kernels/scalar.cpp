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

#include "kernels_impl.h"

namespace qsim::kernels::scalar {
namespace {

struct Pair {
  double re;
  double im;
};

inline Pair load(const Complex& z) { return {z.real(), z.imag()}; }

// Written out by hand: std::complex multiplication carries NaN recovery
// branches we do not want in the reference loop.
inline Pair mul_add(Pair acc, Pair m, Pair a) {
  return {acc.re + (m.re * a.re - m.im * a.im), acc.im + (m.re * a.im + m.im * a.re)};
}

}  // namespace

void apply_1q(Complex* amps, std::size_t size, std::size_t mask, const Complex* m) {
  const Pair m00 = load(m[0]), m01 = load(m[1]), m10 = load(m[2]), m11 = load(m[3]);
  for (std::size_t base = 0; base < size; base += 2 * mask) {
    for (std::size_t i = base; i < base + mask; ++i) {
      Pair a0 = load(amps[i]);
      Pair a1 = load(amps[i + mask]);
      Pair r0 = mul_add(mul_add({0.0, 0.0}, m00, a0), m01, a1);
      Pair r1 = mul_add(mul_add({0.0, 0.0}, m10, a0), m11, a1);
      amps[i] = {r0.re, r0.im};
      amps[i + mask] = {r1.re, r1.im};
    }
  }
}

void apply_2q(Complex* amps, std::size_t size, std::size_t mask_first, std::size_t mask_second,
              const Complex* m) {
  const std::size_t lo = mask_first < mask_second ? mask_first : mask_second;
  const std::size_t hi = mask_first < mask_second ? mask_second : mask_first;
  const std::size_t offsets[4] = {0, mask_second, mask_first, mask_first | mask_second};
  Pair mat[16];
  for (int k = 0; k < 16; ++k) {
    mat[k] = load(m[k]);
  }
  for (std::size_t k = 0; k < size / 4; ++k) {
    std::size_t base = insert_two_zero_bits(k, lo, hi);
    Pair in[4];
    for (int c = 0; c < 4; ++c) {
      in[c] = load(amps[base + offsets[c]]);
    }
    for (int r = 0; r < 4; ++r) {
      Pair acc{0.0, 0.0};
      for (int c = 0; c < 4; ++c) {
        acc = mul_add(acc, mat[4 * r + c], in[c]);
      }
      amps[base + offsets[r]] = {acc.re, acc.im};
    }
  }
}

void abs2(const Complex* amps, std::size_t size, double* out) {
  for (std::size_t i = 0; i < size; ++i) {
    double re = amps[i].real();
    double im = amps[i].imag();
    out[i] = re * re + im * im;
  }
}

}  // namespace qsim::kernels::scalar
