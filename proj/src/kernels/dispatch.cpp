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

#include <cstdlib>
#include <string>

#include "kernels_impl.h"
#include "qsim/error.h"

namespace qsim::kernels {
namespace {

constexpr KernelTable kScalar{Isa::Scalar, scalar::apply_1q, scalar::apply_2q, scalar::abs2};
#if defined(QSIM_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, avx2::apply_1q, avx2::apply_2q, avx2::abs2};
#endif
#if defined(QSIM_HAVE_NEON)
constexpr KernelTable kNeon{Isa::Neon, neon::apply_1q, neon::apply_2q, neon::abs2};
#endif

const KernelTable& pick_active() {
  if (const char* forced = std::getenv("QSIM_KERNEL"); forced != nullptr && *forced != '\0') {
    std::string name(forced);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (name == to_string(isa)) {
        return table(isa);
      }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown QSIM_KERNEL value '" + name + "'");
  }
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (supported(isa)) {
      return table(isa);
    }
  }
  return kScalar;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(QSIM_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(QSIM_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (supported(isa)) {
      out.push_back(isa);
    }
  }
  return out;
}

const KernelTable& table(Isa isa) {
  if (!supported(isa)) {
    throw Error(ErrorKind::InvalidArgument,
                "kernel '" + std::string(to_string(isa)) + "' is not available on this host");
  }
  switch (isa) {
#if defined(QSIM_HAVE_AVX2)
    case Isa::Avx2: return kAvx2;
#endif
#if defined(QSIM_HAVE_NEON)
    case Isa::Neon: return kNeon;
#endif
    default: return kScalar;
  }
}

const KernelTable& active() {
  static const KernelTable& chosen = pick_active();
  return chosen;
}

void apply_1q(std::span<Complex> amps, std::size_t mask, const Mat2& m) {
  active().apply_1q(amps.data(), amps.size(), mask, m.data());
}

void apply_2q(std::span<Complex> amps, std::size_t mask_first, std::size_t mask_second, const Mat4& m) {
  active().apply_2q(amps.data(), amps.size(), mask_first, mask_second, m.data());
}

std::vector<double> abs2(std::span<const Complex> amps) {
  std::vector<double> out(amps.size());
  active().abs2(amps.data(), amps.size(), out.data());
  return out;
}

}  // namespace qsim::kernels
