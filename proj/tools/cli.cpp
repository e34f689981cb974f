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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qsim/algorithms.h"
#include "qsim/capacity.h"
#include "qsim/circuit.h"
#include "qsim/error.h"
#include "qsim/measure.h"
#include "qsim/qcf.h"

namespace qsim::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Circuit load_circuit(const std::string& path) {
  std::string source = read_file(path);
  try {
    return qcf::parse(source);
  } catch (const qcf::ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string format_entry(Complex z) {
  double re = std::abs(z.real()) < 5e-7 ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 5e-7 ? 0.0 : z.imag();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f%c%.6fi", re, im < 0 ? '-' : '+', std::abs(im));
  return buf;
}

std::string format_fixed9(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

unsigned sampling_threads() {
  unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 8u);
}

struct RunOptions {
  std::string file;
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
  std::string backend = "statevector";
  std::string format = "text";
};

void cmd_run(const RunOptions& opt, const Capacity& cap, std::ostream& out) {
  Circuit c = load_circuit(opt.file);
  if (opt.backend == "density") {
    check_capacity(c.num_qubits(), cap.density_qubits, "density-matrix simulation");
    DensityMatrix rho = apply_density(c, to_density(StateVector::basis(c.num_qubits(), 0)), cap);
    OutcomeDistribution d = probabilities_density(rho);
    out << (opt.format == "json" ? to_json(d) : opt.format == "csv" ? to_csv(d) : to_text(d));
    return;
  }
  ShotHistogram h = sample(c, opt.shots, opt.seed, {sampling_threads()}, cap);
  out << (opt.format == "json" ? to_json(h) : opt.format == "csv" ? to_csv(h) : to_text(h));
}

void cmd_unitary(const std::string& file, const Capacity& cap, std::ostream& out) {
  Circuit c = load_circuit(file);
  ComplexMatrix u = unitary_of(c, cap);
  std::string row;
  for (std::size_t i = 0; i < u.rows(); ++i) {
    row.clear();
    for (std::size_t j = 0; j < u.cols(); ++j) {
      if (j > 0) {
        row += ' ';
      }
      row += format_entry(u(i, j));
    }
    row += '\n';
    out << row;
  }
}

void cmd_grover(int n, std::uint64_t marked, std::optional<int> iterations, const Capacity& cap, std::ostream& out) {
  if (n < 2) {
    throw UsageError("grover needs at least 2 qubits");
  }
  check_capacity(n, cap.grover_qubits, "Grover search");
  if (marked >= (std::uint64_t{1} << n)) {
    throw UsageError("marked index " + std::to_string(marked) + " out of range for " + std::to_string(n) + " qubits");
  }
  int k = iterations.value_or(grover_optimal_iterations(n));
  if (k < 0) {
    throw UsageError("iterations must be non-negative");
  }
  GroverResult result = grover_run({n, marked, k}, cap);
  out << "qubits: " << n << "\n"
      << "marked: " << bitstring(marked, n) << "\n"
      << "iterations: " << k << "\n"
      << "success_probability: " << format_fixed9(result.success_probability) << "\n"
      << "closed_form: " << format_fixed9(grover_closed_form(n, k)) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qsim: quantum circuit simulator"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run_cmd = app.add_subcommand("run", "Simulate a .qcf circuit and report measurement results");
  run_cmd->add_option("file", run_opt.file, "Circuit file")->required();
  run_cmd->add_option("--shots", run_opt.shots, "Number of shots (statevector backend)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  run_cmd->add_option("--seed", run_opt.seed, "Sampling seed")->capture_default_str();
  run_cmd->add_option("--backend", run_opt.backend, "statevector samples shots; density prints exact probabilities")
      ->check(CLI::IsMember({"statevector", "density"}))
      ->capture_default_str();
  run_cmd->add_option("--format", run_opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  std::string unitary_file;
  CLI::App* unitary_cmd = app.add_subcommand("unitary", "Print the full unitary of a circuit (at most 12 qubits)");
  unitary_cmd->add_option("file", unitary_file, "Circuit file")->required();

  int grover_qubits = 0;
  std::uint64_t grover_marked = 0;
  std::optional<int> grover_iterations;
  CLI::App* grover_cmd = app.add_subcommand("grover", "Run Grover search for one marked basis state");
  grover_cmd->add_option("qubits", grover_qubits, "Number of qubits")->required();
  grover_cmd->add_option("marked", grover_marked, "Marked basis index")->required();
  grover_cmd->add_option("iterations", grover_iterations, "Iterations (default: optimal count)");

  std::string validate_file;
  CLI::App* validate_cmd = app.add_subcommand("validate", "Check that a .qcf file parses");
  validate_cmd->add_option("file", validate_file, "Circuit file")->required();

  app.footer("Exit codes: 0 success, 2 parse or usage error, 3 capacity or runtime error.\n"
             "QSIM_MAX_QUBITS overrides every qubit capacity limit.");

  std::vector<const char*> argv;
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    Capacity cap = Capacity::from_env();
    if (*run_cmd) {
      cmd_run(run_opt, cap, out);
    } else if (*unitary_cmd) {
      cmd_unitary(unitary_file, cap, out);
    } else if (*grover_cmd) {
      cmd_grover(grover_qubits, grover_marked, grover_iterations, cap, out);
    } else if (*validate_cmd) {
      load_circuit(validate_file);
      out << "OK\n";
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidArgument ? kUsageError : kRuntimeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kOk;
}

}  // namespace qsim::cli
