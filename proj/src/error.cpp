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

#include "qsim/error.h"

namespace qsim {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorKind::ProbabilitiesInvalid: return "ProbabilitiesInvalid";
    case ErrorKind::UnknownGate: return "UnknownGate";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::WireOutOfRange: return "WireOutOfRange";
    case ErrorKind::DuplicateWire: return "DuplicateWire";
    case ErrorKind::InvalidSubsystem: return "InvalidSubsystem";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qsim
