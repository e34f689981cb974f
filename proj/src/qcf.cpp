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

#include "qsim/qcf.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "qsim/error.h"
#include "qsim/gates.h"

namespace qsim::qcf {
namespace {

constexpr int kMaxHeaderQubits = 63;

struct Token {
  std::string_view text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
  int end_column;  // one past the last character before any comment
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; }

Line lex_line(std::string_view text, int number) {
  if (!text.empty() && text.back() == '\r') {
    text.remove_suffix(1);
  }
  Line line{number, {}, 1};
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    if (text[i] == '#') {
      break;
    }
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i]) && text[i] != '#') {
      ++i;
    }
    line.tokens.push_back({text.substr(start, i - start), static_cast<int>(start) + 1});
    line.end_column = static_cast<int>(i) + 1;
  }
  return line;
}

std::vector<Line> lex(std::string_view source) {
  std::vector<Line> lines;
  int number = 1;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < source.size()) {
        lines.push_back(lex_line(source.substr(start), number));
      }
      break;
    }
    lines.push_back(lex_line(source.substr(start, end - start), number));
    start = end + 1;
    ++number;
  }
  return lines;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

// Decimal digits only, no sign; nullopt on anything else or overflow past
// int range.
std::optional<int> parse_int(std::string_view text) {
  if (text.empty() || text.size() > 9) {
    return std::nullopt;
  }
  int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      return std::nullopt;
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

std::optional<GateKind> lookup_gate(std::string_view text) {
  for (GateKind kind : all_gate_kinds()) {
    if (iequals(standard_gate(kind).label, text)) {
      return kind;
    }
  }
  return std::nullopt;
}

[[noreturn]] void fail(ParseErrorKind kind, int line, int column, std::string message) {
  throw ParseError(kind, line, column, std::move(message));
}

int parse_header(const Line& line) {
  const Token& keyword = line.tokens[0];
  if (!iequals(keyword.text, "qubits")) {
    fail(ParseErrorKind::MissingHeader, line.number, keyword.column,
         "expected 'qubits N' header before '" + std::string(keyword.text) + "'");
  }
  if (line.tokens.size() < 2) {
    fail(ParseErrorKind::BadInteger, line.number, line.end_column, "missing qubit count after 'qubits'");
  }
  const Token& count = line.tokens[1];
  std::optional<int> n = parse_int(count.text);
  if (!n || *n < 1 || *n > kMaxHeaderQubits) {
    fail(ParseErrorKind::BadInteger, line.number, count.column,
         "qubit count must be an integer in [1, " + std::to_string(kMaxHeaderQubits) + "], got '" +
             std::string(count.text) + "'");
  }
  if (line.tokens.size() > 2) {
    fail(ParseErrorKind::TrailingGarbage, line.number, line.tokens[2].column,
         "unexpected '" + std::string(line.tokens[2].text) + "' after header");
  }
  return *n;
}

void parse_instruction(const Line& line, Circuit& circuit) {
  const Token& name = line.tokens[0];
  if (iequals(name.text, "qubits")) {
    fail(ParseErrorKind::TrailingGarbage, line.number, name.column, "duplicate 'qubits' header");
  }
  std::optional<GateKind> kind = lookup_gate(name.text);
  if (!kind) {
    fail(ParseErrorKind::UnknownGate, line.number, name.column, "unknown gate '" + std::string(name.text) + "'");
  }
  const Gate& gate = standard_gate(*kind);
  const std::string lower = [&] {
    std::string s = gate.label;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
  }();

  const std::size_t operands = line.tokens.size() - 1;
  const std::size_t arity = static_cast<std::size_t>(gate.arity);
  std::vector<int> wires;
  for (std::size_t k = 0; k < std::min(operands, arity); ++k) {
    const Token& tok = line.tokens[k + 1];
    std::optional<int> wire = parse_int(tok.text);
    if (!wire) {
      fail(ParseErrorKind::BadInteger, line.number, tok.column,
           "expected a wire index, got '" + std::string(tok.text) + "'");
    }
    if (*wire >= circuit.num_qubits()) {
      fail(ParseErrorKind::WireOutOfRange, line.number, tok.column,
           "wire " + std::to_string(*wire) + " outside [0, " + std::to_string(circuit.num_qubits()) + ")");
    }
    if (std::find(wires.begin(), wires.end(), *wire) != wires.end()) {
      fail(ParseErrorKind::BadArity, line.number, tok.column,
           lower + " needs " + std::to_string(arity) + " distinct wires, wire " + std::to_string(*wire) +
               " repeats");
    }
    wires.push_back(*wire);
  }
  if (operands < arity) {
    fail(ParseErrorKind::BadArity, line.number, line.end_column,
         lower + " expects " + std::to_string(arity) + " wire(s), got " + std::to_string(operands));
  }
  if (operands > arity) {
    const Token& extra = line.tokens[arity + 1];
    if (parse_int(extra.text)) {
      fail(ParseErrorKind::BadArity, line.number, extra.column,
           lower + " expects " + std::to_string(arity) + " wire(s), got " + std::to_string(operands));
    }
    fail(ParseErrorKind::TrailingGarbage, line.number, extra.column,
         "unexpected '" + std::string(extra.text) + "' after " + lower + " operands");
  }
  circuit.add(*kind, std::move(wires));
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnknownGate: return "UnknownGate";
    case ParseErrorKind::BadArity: return "BadArity";
    case ParseErrorKind::WireOutOfRange: return "WireOutOfRange";
    case ParseErrorKind::BadInteger: return "BadInteger";
    case ParseErrorKind::MissingHeader: return "MissingHeader";
    case ParseErrorKind::TrailingGarbage: return "TrailingGarbage";
  }
  return "Unknown";
}

ParseError::ParseError(ParseErrorKind kind, int line, int column, std::string message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

Circuit parse(std::string_view source) {
  std::optional<Circuit> circuit;
  for (const Line& line : lex(source)) {
    if (line.tokens.empty()) {
      continue;
    }
    if (!circuit) {
      circuit.emplace(parse_header(line));
    } else {
      parse_instruction(line, *circuit);
    }
  }
  if (!circuit) {
    fail(ParseErrorKind::MissingHeader, 1, 1, "missing 'qubits N' header");
  }
  return std::move(*circuit);
}

std::string serialize(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.num_qubits()) + "\n";
  for (const Instruction& inst : c.instructions()) {
    std::string label = inst.definition().label;
    std::transform(label.begin(), label.end(), label.begin(), [](unsigned char ch) { return std::tolower(ch); });
    out += label;
    for (int w : inst.wires) {
      out += " " + std::to_string(w);
    }
    out += "\n";
  }
  return out;
}

}  // namespace qsim::qcf
