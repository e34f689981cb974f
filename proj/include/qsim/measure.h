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

#ifndef QSIM_MEASURE_H_
#define QSIM_MEASURE_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsim/capacity.h"
#include "qsim/circuit.h"
#include "qsim/state.h"

namespace qsim {

/// Born-rule distribution over the 2^n computational basis outcomes.
struct OutcomeDistribution {
  int num_qubits = 0;
  std::vector<double> probabilities;
};

struct MeasurementRecord {
  std::string outcome;  // bit label, qubit 0 first
  std::uint64_t index = 0;
  StateVector post_state;
};

struct ShotHistogram {
  std::map<std::string, std::uint64_t> counts;  // only outcomes that occurred
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const ShotHistogram&, const ShotHistogram&) = default;
};

/// n-character label of a basis index, qubit 0 first ("01" is index 1).
std::string bitstring(std::uint64_t index, int num_qubits);

OutcomeDistribution probabilities(const StateVector& s);

/// Real parts of the diagonal.
OutcomeDistribution probabilities_density(const DensityMatrix& rho);

/// Collapses onto the least outcome k whose cumulative probability exceeds
/// `draw`. Throws Error(InvalidArgument) unless 0 <= draw < 1.
MeasurementRecord measure_all(const StateVector& s, double draw);

/// Measures one qubit: bit 0 iff draw < P(bit 0). The post state is the
/// renormalized projection. Throws Error(WireOutOfRange).
MeasurementRecord measure_qubit(const StateVector& s, int qubit, double draw);

/// Uniform [0, 1) draw for shot `shot` under `seed`: the shot-th output of
/// a SplitMix64 stream whose state starts at mix(seed). Depends on nothing
/// else, so shots can be evaluated in any order or on any thread.
double shot_draw(std::uint64_t seed, std::uint64_t shot);

struct SampleOptions {
  unsigned threads = 1;
};

/// `shots` runs of: |0...0>, apply c, measure_all. Outcomes with model
/// probability <= 1e-12 never appear. The result depends only on
/// (c, shots, seed), not on options.threads.
ShotHistogram sample(const Circuit& c, std::uint64_t shots, std::uint64_t seed, const SampleOptions& options = {},
                     const Capacity& cap = {});

/// {"counts": {label: count, ...}, "seed": seed, "shots": shots}
std::string to_json(const ShotHistogram& h);
/// "label,count" header, then one row per observed label.
std::string to_csv(const ShotHistogram& h);
/// Aligned label/count columns.
std::string to_text(const ShotHistogram& h);

/// {"probabilities": {label: p, ...}} over every basis outcome.
std::string to_json(const OutcomeDistribution& d);
std::string to_csv(const OutcomeDistribution& d);
std::string to_text(const OutcomeDistribution& d);

}  // namespace qsim

#endif  // QSIM_MEASURE_H_
