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

#include "qsim/capacity.h"

#include <cstdlib>
#include <string>

#include "qsim/error.h"

namespace qsim {

Capacity Capacity::from_env() {
  Capacity cap;
  const char* raw = std::getenv("QSIM_MAX_QUBITS");
  if (raw == nullptr || *raw == '\0') {
    return cap;
  }
  std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 3) {
    throw Error(ErrorKind::InvalidArgument,
                "QSIM_MAX_QUBITS must be a non-negative integer, got '" + text + "'");
  }
  int limit = std::stoi(text);
  cap.statevector_qubits = limit;
  cap.density_qubits = limit;
  cap.unitary_qubits = limit;
  cap.grover_qubits = limit;
  return cap;
}

void check_capacity(int num_qubits, int limit, const char* what) {
  if (num_qubits > limit) {
    throw Error(ErrorKind::CapacityExceeded,
                std::string(what) + " limited to " + std::to_string(limit) + " qubits, got " +
                    std::to_string(num_qubits));
  }
}

}  // namespace qsim
