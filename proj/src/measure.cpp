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

#include "qsim/measure.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include <json.hpp>

#include "qsim/error.h"
#include "qsim/kernels.h"

namespace qsim {
namespace {

constexpr double kNegligibleProbability = 1e-12;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void check_draw(double draw) {
  if (!(draw >= 0.0 && draw < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "draw must lie in [0, 1)");
  }
}

// Least k with cdf[k] > draw; falls back to the last outcome with positive
// weight when roundoff leaves the total below the draw.
std::uint64_t invert_cdf(const std::vector<double>& cdf, const std::vector<double>& weights, double draw) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), draw);
  if (it != cdf.end()) {
    return static_cast<std::uint64_t>(it - cdf.begin());
  }
  for (std::size_t k = weights.size(); k-- > 0;) {
    if (weights[k] > 0.0) {
      return k;
    }
  }
  return 0;
}

std::vector<double> cumulative(const std::vector<double>& weights) {
  std::vector<double> cdf(weights.size());
  double running = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    running += weights[k];
    cdf[k] = running;
  }
  return cdf;
}

double clean(double p) { return (p < 0.0 && p >= -kNegligibleProbability) ? 0.0 : p; }

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9f", clean(p));
  return buf;
}

}  // namespace

std::string bitstring(std::uint64_t index, int num_qubits) {
  std::string out(static_cast<std::size_t>(num_qubits), '0');
  for (int q = 0; q < num_qubits; ++q) {
    if (index & qubit_mask(q, num_qubits)) {
      out[static_cast<std::size_t>(q)] = '1';
    }
  }
  return out;
}

OutcomeDistribution probabilities(const StateVector& s) {
  return {s.num_qubits(), kernels::abs2(s.amplitudes())};
}

OutcomeDistribution probabilities_density(const DensityMatrix& rho) {
  OutcomeDistribution d{rho.num_qubits(), std::vector<double>(rho.dimension())};
  for (std::size_t k = 0; k < rho.dimension(); ++k) {
    d.probabilities[k] = rho(k, k).real();
  }
  return d;
}

MeasurementRecord measure_all(const StateVector& s, double draw) {
  check_draw(draw);
  std::vector<double> weights = probabilities(s).probabilities;
  std::uint64_t k = invert_cdf(cumulative(weights), weights, draw);
  return {bitstring(k, s.num_qubits()), k, StateVector::basis(s.num_qubits(), k)};
}

MeasurementRecord measure_qubit(const StateVector& s, int qubit, double draw) {
  check_draw(draw);
  if (qubit < 0 || qubit >= s.num_qubits()) {
    throw Error(ErrorKind::WireOutOfRange,
                "qubit " + std::to_string(qubit) + " outside [0, " + std::to_string(s.num_qubits()) + ")");
  }
  const std::size_t mask = qubit_mask(qubit, s.num_qubits());
  double p0 = 0.0;
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    if ((k & mask) == 0) {
      p0 += std::norm(s[k]);
    }
  }
  const bool bit = !(draw < p0);
  std::vector<Complex> projected(s.dimension());
  double kept = 0.0;
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    if (((k & mask) != 0) == bit) {
      projected[k] = s[k];
      kept += std::norm(s[k]);
    }
  }
  if (!(kept > 0.0)) {
    throw Error(ErrorKind::NotNormalized, "measured outcome has zero probability");
  }
  double scale = 1.0 / std::sqrt(kept);
  for (Complex& a : projected) {
    a *= scale;
  }
  return {bit ? "1" : "0", bit ? 1u : 0u, StateVector::adopt(std::move(projected))};
}

double shot_draw(std::uint64_t seed, std::uint64_t shot) {
  constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  std::uint64_t bits = mix64(mix64(seed) + kGamma * (shot + 1));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

ShotHistogram sample(const Circuit& c, std::uint64_t shots, std::uint64_t seed, const SampleOptions& options,
                     const Capacity& cap) {
  if (shots == 0) {
    throw Error(ErrorKind::InvalidArgument, "shots must be positive");
  }
  // Every shot starts from |0...0> and runs the same unitary circuit, so the
  // pre-measurement state is shared and only the draw differs per shot.
  StateVector final_state = apply(c, StateVector::basis(c.num_qubits(), 0), cap);
  std::vector<double> weights = probabilities(final_state).probabilities;
  for (double& w : weights) {
    if (w <= kNegligibleProbability) {
      w = 0.0;
    }
  }
  const std::vector<double> cdf = cumulative(weights);

  std::vector<std::uint64_t> outcomes(shots);
  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      outcomes[i] = invert_cdf(cdf, weights, shot_draw(seed, i));
    }
  };
  unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || shots < threads) {
    run_range(0, shots);
  } else {
    std::vector<std::thread> pool;
    std::uint64_t chunk = (shots + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t begin = std::min<std::uint64_t>(shots, t * chunk);
      std::uint64_t end = std::min<std::uint64_t>(shots, begin + chunk);
      pool.emplace_back(run_range, begin, end);
    }
    for (std::thread& worker : pool) {
      worker.join();
    }
  }

  std::map<std::uint64_t, std::uint64_t> by_index;
  for (std::uint64_t k : outcomes) {
    ++by_index[k];
  }
  ShotHistogram h;
  h.shots = shots;
  h.seed = seed;
  for (const auto& [k, count] : by_index) {
    h.counts.emplace(bitstring(k, c.num_qubits()), count);
  }
  return h;
}

std::string to_json(const ShotHistogram& h) {
  nlohmann::ordered_json j;
  j["counts"] = nlohmann::ordered_json::object();
  for (const auto& [label, count] : h.counts) {
    j["counts"][label] = count;
  }
  j["shots"] = h.shots;
  j["seed"] = h.seed;
  return j.dump(2) + "\n";
}

std::string to_csv(const ShotHistogram& h) {
  std::string out = "label,count\n";
  for (const auto& [label, count] : h.counts) {
    out += label + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string to_text(const ShotHistogram& h) {
  std::size_t label_width = 0;
  std::size_t count_width = std::to_string(h.shots).size();
  for (const auto& entry : h.counts) {
    label_width = std::max(label_width, entry.first.size());
  }
  std::string out;
  for (const auto& [label, count] : h.counts) {
    std::string n = std::to_string(count);
    out += label + std::string(label_width - label.size() + 2, ' ') + std::string(count_width - n.size(), ' ') +
           n + "\n";
  }
  return out;
}

std::string to_json(const OutcomeDistribution& d) {
  nlohmann::ordered_json j;
  j["probabilities"] = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < d.probabilities.size(); ++k) {
    j["probabilities"][bitstring(k, d.num_qubits)] = clean(d.probabilities[k]);
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const OutcomeDistribution& d) {
  std::string out = "label,probability\n";
  for (std::size_t k = 0; k < d.probabilities.size(); ++k) {
    out += bitstring(k, d.num_qubits) + "," + format_probability(d.probabilities[k]) + "\n";
  }
  return out;
}

std::string to_text(const OutcomeDistribution& d) {
  std::string out;
  for (std::size_t k = 0; k < d.probabilities.size(); ++k) {
    out += bitstring(k, d.num_qubits) + "  " + format_probability(d.probabilities[k]) + "\n";
  }
  return out;
}

}  // namespace qsim
