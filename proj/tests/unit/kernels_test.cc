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

#include <random>

#include "gtest/gtest.h"

#include "../test_util.h"
#include "qsim/error.h"
#include "qsim/kernels.h"

using namespace qsim;
using namespace qsim::kernels;

namespace {

std::vector<Complex> random_amplitudes(std::mt19937_64& rng, std::size_t size) {
  std::vector<Complex> amps(size);
  for (Complex& a : amps) {
    a = qsim::testing::random_complex(rng);
  }
  return amps;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

class KernelEquivalence : public ::testing::TestWithParam<Isa> {};

}  // namespace

TEST(dispatch, scalar_always_supported) {
  EXPECT_TRUE(supported(Isa::Scalar));
  std::vector<Isa> isas = supported_isas();
  ASSERT_FALSE(isas.empty());
  EXPECT_EQ(isas.front(), Isa::Scalar);
  EXPECT_TRUE(supported(active().isa));
}

TEST(dispatch, unsupported_table_throws) {
  for (Isa isa : {Isa::Avx2, Isa::Neon}) {
    if (!supported(isa)) {
      EXPECT_THROW(table(isa), Error);
    }
  }
}

TEST_P(KernelEquivalence, apply_1q_matches_scalar) {
  const KernelTable& reference = table(Isa::Scalar);
  const KernelTable& candidate = table(GetParam());
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 10; ++n) {
    std::size_t size = std::size_t{1} << n;
    for (int bit = 0; bit < n; ++bit) {
      std::vector<Complex> m = random_amplitudes(rng, 4);
      std::vector<Complex> a = random_amplitudes(rng, size);
      std::vector<Complex> b = a;
      reference.apply_1q(a.data(), size, std::size_t{1} << bit, m.data());
      candidate.apply_1q(b.data(), size, std::size_t{1} << bit, m.data());
      EXPECT_LE(max_diff(a, b), 1e-12) << "n=" << n << " bit=" << bit;
    }
  }
}

TEST_P(KernelEquivalence, apply_2q_matches_scalar) {
  const KernelTable& reference = table(Isa::Scalar);
  const KernelTable& candidate = table(GetParam());
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 8; ++n) {
    std::size_t size = std::size_t{1} << n;
    for (int first = 0; first < n; ++first) {
      for (int second = 0; second < n; ++second) {
        if (first == second) {
          continue;
        }
        std::vector<Complex> m = random_amplitudes(rng, 16);
        std::vector<Complex> a = random_amplitudes(rng, size);
        std::vector<Complex> b = a;
        reference.apply_2q(a.data(), size, std::size_t{1} << first, std::size_t{1} << second, m.data());
        candidate.apply_2q(b.data(), size, std::size_t{1} << first, std::size_t{1} << second, m.data());
        EXPECT_LE(max_diff(a, b), 1e-12) << "n=" << n << " bits=" << first << "," << second;
      }
    }
  }
}

TEST_P(KernelEquivalence, abs2_matches_scalar) {
  const KernelTable& reference = table(Isa::Scalar);
  const KernelTable& candidate = table(GetParam());
  std::mt19937_64 rng(13);
  for (std::size_t size : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 64u, 1023u}) {
    std::vector<Complex> amps = random_amplitudes(rng, size);
    std::vector<double> a(size), b(size);
    reference.abs2(amps.data(), size, a.data());
    candidate.abs2(amps.data(), size, b.data());
    for (std::size_t k = 0; k < size; ++k) {
      EXPECT_DOUBLE_EQ(a[k], b[k]);
    }
  }
}

TEST_P(KernelEquivalence, deterministic_across_calls) {
  const KernelTable& candidate = table(GetParam());
  std::mt19937_64 rng(14);
  std::vector<Complex> m = random_amplitudes(rng, 4);
  std::vector<Complex> a = random_amplitudes(rng, 256);
  std::vector<Complex> b = a;
  candidate.apply_1q(a.data(), a.size(), 8, m.data());
  candidate.apply_1q(b.data(), b.size(), 8, m.data());
  EXPECT_EQ(a, b);
}

INSTANTIATE_TEST_SUITE_P(SupportedIsas, KernelEquivalence, ::testing::ValuesIn(supported_isas()),
                         [](const ::testing::TestParamInfo<Isa>& info) {
                           return std::string(to_string(info.param));
                         });

TEST(scalar_kernel, apply_1q_against_hand_expansion) {
  // X on the high bit of a 2-qubit register swaps |0x> and |1x>.
  std::vector<Complex> amps{1.0, 2.0, 3.0, 4.0};
  Mat2 x{0.0, 1.0, 1.0, 0.0};
  table(Isa::Scalar).apply_1q(amps.data(), 4, 2, x.data());
  EXPECT_EQ(amps, (std::vector<Complex>{3.0, 4.0, 1.0, 2.0}));
}

TEST(scalar_kernel, apply_2q_local_index_order) {
  // Permutation |00>->|00>, |01>->|01>, |10>->|11>, |11>->|10> with the
  // first mask as the control bit.
  Mat4 cnot{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
  std::vector<Complex> amps{10.0, 11.0, 12.0, 13.0};
  // control on the low bit (mask 1), target on the high bit (mask 2)
  table(Isa::Scalar).apply_2q(amps.data(), 4, 1, 2, cnot.data());
  // index 1 (low bit set, high clear) <-> index 3
  EXPECT_EQ(amps, (std::vector<Complex>{10.0, 13.0, 12.0, 11.0}));
}
