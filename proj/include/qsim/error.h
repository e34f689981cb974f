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

#ifndef QSIM_ERROR_H_
#define QSIM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsim {

enum class ErrorKind {
  DimensionMismatch,
  CapacityExceeded,
  NotSquare,
  NotHermitian,
  NoConvergence,
  NotPowerOfTwo,
  NotNormalized,
  NotDensityMatrix,
  ProbabilitiesInvalid,
  UnknownGate,
  ArityMismatch,
  WireOutOfRange,
  DuplicateWire,
  InvalidSubsystem,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported as an Error carrying a machine-checkable
/// kind. The message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qsim

#endif  // QSIM_ERROR_H_
