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

#ifndef QSIM_QCF_H_
#define QSIM_QCF_H_

// Reader and writer for .qcf circuit files:
//
//   # Bell pair
//   qubits 2
//   h 0
//   cnot 0 1
//
// The first non-blank, non-comment line is the "qubits N" header. Each
// further line holds one gate (x y z s t h swap cnot, case-insensitive)
// followed by its wire indices; cnot lists control then target. "#" starts
// a comment running to the end of the line. LF and CRLF line endings are
// both accepted.

#include <stdexcept>
#include <string>
#include <string_view>

#include "qsim/circuit.h"

namespace qsim::qcf {

enum class ParseErrorKind { UnknownGate, BadArity, WireOutOfRange, BadInteger, MissingHeader, TrailingGarbage };

std::string_view to_string(ParseErrorKind kind);

/// First error found in the source. line and column are 1-based and point
/// at the offending token (or just past the end of a short line).
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, int column, std::string message);

  ParseErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int column_;
  std::string message_;
};

Circuit parse(std::string_view source);

/// Canonical text: lowercase labels, single spaces, one instruction per
/// line, LF endings, trailing newline.
std::string serialize(const Circuit& c);

}  // namespace qsim::qcf

#endif  // QSIM_QCF_H_
