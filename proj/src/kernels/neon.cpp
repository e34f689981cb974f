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

// AArch64 only; NEON is part of the base ISA there.

#include <arm_neon.h>

#include "kernels_impl.h"

namespace qsim::kernels::neon {
namespace {

inline float64x2_t load(const Complex* p) { return vld1q_f64(reinterpret_cast<const double*>(p)); }
inline void store(Complex* p, float64x2_t v) { vst1q_f64(reinterpret_cast<double*>(p), v); }

// One complex number per register: [re, im].
inline float64x2_t cmul(float64x2_t x, float64x2_t c) {
  const float64x2_t sign = {-1.0, 1.0};
  float64x2_t c_re = vdupq_laneq_f64(c, 0);
  float64x2_t c_im = vdupq_laneq_f64(c, 1);
  float64x2_t x_swapped = vextq_f64(x, x, 1);
  return vfmaq_f64(vmulq_f64(vmulq_f64(x_swapped, c_im), sign), x, c_re);
}

}  // namespace

void apply_1q(Complex* amps, std::size_t size, std::size_t mask, const Complex* m) {
  const float64x2_t m00 = load(m + 0), m01 = load(m + 1), m10 = load(m + 2), m11 = load(m + 3);
  for (std::size_t base = 0; base < size; base += 2 * mask) {
    for (std::size_t i = base; i < base + mask; ++i) {
      float64x2_t a0 = load(amps + i);
      float64x2_t a1 = load(amps + i + mask);
      store(amps + i, vaddq_f64(cmul(a0, m00), cmul(a1, m01)));
      store(amps + i + mask, vaddq_f64(cmul(a0, m10), cmul(a1, m11)));
    }
  }
}

void apply_2q(Complex* amps, std::size_t size, std::size_t mask_first, std::size_t mask_second,
              const Complex* m) {
  const std::size_t lo = mask_first < mask_second ? mask_first : mask_second;
  const std::size_t hi = mask_first < mask_second ? mask_second : mask_first;
  const std::size_t offsets[4] = {0, mask_second, mask_first, mask_first | mask_second};
  float64x2_t mat[16];
  for (int k = 0; k < 16; ++k) {
    mat[k] = load(m + k);
  }
  for (std::size_t k = 0; k < size / 4; ++k) {
    std::size_t base = insert_two_zero_bits(k, lo, hi);
    float64x2_t in[4];
    for (int c = 0; c < 4; ++c) {
      in[c] = load(amps + base + offsets[c]);
    }
    for (int r = 0; r < 4; ++r) {
      float64x2_t acc = vdupq_n_f64(0.0);
      for (int c = 0; c < 4; ++c) {
        acc = vaddq_f64(acc, cmul(in[c], mat[4 * r + c]));
      }
      store(amps + base + offsets[r], acc);
    }
  }
}

void abs2(const Complex* amps, std::size_t size, double* out) {
  for (std::size_t i = 0; i < size; ++i) {
    float64x2_t a = load(amps + i);
    out[i] = vaddvq_f64(vmulq_f64(a, a));
  }
}

}  // namespace qsim::kernels::neon
