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

#ifndef QSIM_SRC_KERNELS_KERNELS_IMPL_H_
#define QSIM_SRC_KERNELS_KERNELS_IMPL_H_

#include <cstddef>

#include "qsim/kernels.h"

namespace qsim::kernels {

// Inserts zero bits at the positions of lo and hi (lo < hi, single bits).
inline std::size_t insert_two_zero_bits(std::size_t k, std::size_t lo, std::size_t hi) {
  k = ((k & ~(lo - 1)) << 1) | (k & (lo - 1));
  k = ((k & ~(hi - 1)) << 1) | (k & (hi - 1));
  return k;
}

namespace scalar {
void apply_1q(Complex* amps, std::size_t size, std::size_t mask, const Complex* m);
void apply_2q(Complex* amps, std::size_t size, std::size_t mask_first, std::size_t mask_second,
              const Complex* m);
void abs2(const Complex* amps, std::size_t size, double* out);
}  // namespace scalar

#if defined(QSIM_HAVE_AVX2)
namespace avx2 {
void apply_1q(Complex* amps, std::size_t size, std::size_t mask, const Complex* m);
void apply_2q(Complex* amps, std::size_t size, std::size_t mask_first, std::size_t mask_second,
              const Complex* m);
void abs2(const Complex* amps, std::size_t size, double* out);
}  // namespace avx2
#endif

#if defined(QSIM_HAVE_NEON)
namespace neon {
void apply_1q(Complex* amps, std::size_t size, std::size_t mask, const Complex* m);
void apply_2q(Complex* amps, std::size_t size, std::size_t mask_first, std::size_t mask_second,
              const Complex* m);
void abs2(const Complex* amps, std::size_t size, double* out);
}  // namespace neon
#endif

}  // namespace qsim::kernels

#endif  // QSIM_SRC_KERNELS_KERNELS_IMPL_H_
