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

#ifndef QSIM_KERNELS_H_
#define QSIM_KERNELS_H_

// Amplitude-array kernels behind the state-vector and density backends.
//
// Every kernel has a scalar reference implementation. Vector variants
// (AVX2+FMA on x86-64, NEON on AArch64) are compiled when the target
// architecture allows and selected at runtime from the CPU's capabilities.
// The environment variable QSIM_KERNEL=scalar|avx2|neon pins the choice.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qsim/matrix.h"

namespace qsim::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

/// Row-major 2x2 and 4x4 gate matrices.
using Mat2 = std::array<Complex, 4>;
using Mat4 = std::array<Complex, 16>;

struct KernelTable {
  Isa isa;
  /// In-place a <- (m on the index bit `mask`) a. size is a power of two,
  /// mask a single bit below size.
  void (*apply_1q)(Complex* amps, std::size_t size, std::size_t mask, const Complex* m);
  /// In-place 4x4 update. The local index is 2*bit(mask_first) + bit(mask_second).
  void (*apply_2q)(Complex* amps, std::size_t size, std::size_t mask_first, std::size_t mask_second,
                   const Complex* m);
  /// out[k] = |amps[k]|^2
  void (*abs2)(const Complex* amps, std::size_t size, double* out);
};

bool supported(Isa isa);
std::vector<Isa> supported_isas();

/// Throws Error(InvalidArgument) if the ISA is not available on this host.
const KernelTable& table(Isa isa);

/// Table picked once per process: QSIM_KERNEL if set, else the widest
/// supported ISA.
const KernelTable& active();

void apply_1q(std::span<Complex> amps, std::size_t mask, const Mat2& m);
void apply_2q(std::span<Complex> amps, std::size_t mask_first, std::size_t mask_second, const Mat4& m);
std::vector<double> abs2(std::span<const Complex> amps);

}  // namespace qsim::kernels

#endif  // QSIM_KERNELS_H_
