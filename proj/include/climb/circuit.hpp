// Copyright 2026 The clifford-climb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "climb/error.hpp"
#include "climb/hierarchy.hpp"
#include "climb/matrix.hpp"

namespace climb {

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

struct SourceSpan {
  int line = 0;
  int column = 0;
};

struct GateApplication {
  std::string name;  // canonical upper-case
  std::vector<int> qubits;
  SourceSpan span;

  // Spans are diagnostics only and do not take part in equality.
  friend bool operator==(const GateApplication& a, const GateApplication& b) {
    return a.name == b.name && a.qubits == b.qubits;
  }
};

struct CircuitAST {
  int n = 0;
  std::vector<GateApplication> ops;

  friend bool operator==(const CircuitAST& a, const CircuitAST& b) = default;
};

struct GateSignature {
  int arity;
  std::function<ExactUnitary()> make;
};

inline const std::map<std::string, GateSignature>& gate_table() {
  static const std::map<std::string, GateSignature> table = {
      {"X", {1, gates::X}},         {"Y", {1, gates::Y}},       {"Z", {1, gates::Z}},
      {"H", {1, gates::H}},         {"S", {1, gates::S}},       {"SDG", {1, gates::Sdg}},
      {"R", {1, gates::R}},         {"CX", {2, gates::CX}},     {"CZ", {2, gates::CZ}},
      {"SWAP", {2, gates::SWAP}},   {"CCX", {3, gates::CCX}},   {"CCZ", {3, gates::CCZ}},
      {"CSWAP", {3, gates::CSWAP}}, {"CCCX", {4, gates::CCCX}},
  };
  return table;
}

namespace circuit_detail {

class LineScanner {
 public:
  LineScanner(std::string text, int line) : text_(std::move(text)), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  int column() const { return static_cast<int>(pos_) + 1; }
  /// Column of the next token.
  int here() {
    skip_space();
    return column();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail(ErrorCode::ParseSyntax, "expected a name");
    return text_.substr(start, pos_ - start);
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(ErrorCode::ParseSyntax, "expected an integer");
    if (pos_ - start > 6) fail(ErrorCode::ParseIndex, "integer too large", static_cast<int>(start) + 1);
    return std::stoi(text_.substr(start, pos_ - start));
  }

  void expect(char ch) {
    skip_space();
    if (peek() != ch) fail(ErrorCode::ParseSyntax, std::string("expected '") + ch + "'");
    ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& msg, int col = 0) const {
    throw ParseError(code, line_, col > 0 ? col : column(), msg);
  }

  int line() const { return line_; }

 private:
  std::string text_;
  std::size_t pos_ = 0;
  int line_;
};

inline std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

}  // namespace circuit_detail

/// Line-oriented circuit text: a "qubits N" header, then one gate per line
/// as NAME(q1,...,qk) with 1-based qubits. A bare NAME is accepted when its
/// arity equals N. '#' starts a comment. Names are case-insensitive.
inline CircuitAST parse_circuit(const std::string& text) {
  using circuit_detail::LineScanner;
  CircuitAST ast;
  bool have_header = false;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    LineScanner scan(raw, line_no);
    if (scan.done()) continue;
    const int name_col = scan.here();
    const std::string name = circuit_detail::upper(scan.word());
    if (!have_header) {
      if (name != "QUBITS") scan.fail(ErrorCode::ParseSyntax, "expected header 'qubits N'", name_col);
      const int num_col = scan.here();
      ast.n = scan.integer();
      if (ast.n < 1) scan.fail(ErrorCode::ParseIndex, "qubit count must be positive", num_col);
      if (!scan.done()) scan.fail(ErrorCode::ParseSyntax, "unexpected text after header");
      have_header = true;
      continue;
    }
    const auto& table = gate_table();
    const auto entry = table.find(name);
    if (entry == table.end()) scan.fail(ErrorCode::ParseSyntax, "unknown gate '" + name + "'", name_col);
    GateApplication op{name, {}, {line_no, name_col}};
    if (scan.accept('(')) {
      do {
        const int arg_col = scan.here();
        const int q = scan.integer();
        if (q < 1 || q > ast.n) {
          scan.fail(ErrorCode::ParseIndex, "qubit " + std::to_string(q) + " outside 1.." + std::to_string(ast.n), arg_col);
        }
        if (std::find(op.qubits.begin(), op.qubits.end(), q) != op.qubits.end()) {
          scan.fail(ErrorCode::ParseDuplicate, "qubit " + std::to_string(q) + " repeated", arg_col);
        }
        op.qubits.push_back(q);
      } while (scan.accept(','));
      scan.expect(')');
    } else if (entry->second.arity == ast.n) {
      for (int q = 1; q <= ast.n; ++q) op.qubits.push_back(q);
    }
    if (static_cast<int>(op.qubits.size()) != entry->second.arity) {
      scan.fail(ErrorCode::ParseArity,
                name + " takes " + std::to_string(entry->second.arity) + " qubits, got " + std::to_string(op.qubits.size()),
                name_col);
    }
    if (!scan.done()) scan.fail(ErrorCode::ParseSyntax, "unexpected text after gate");
    ast.ops.push_back(std::move(op));
  }
  if (!have_header) throw ParseError(ErrorCode::ParseSyntax, line_no + 1, 1, "missing header 'qubits N'");
  return ast;
}

inline CircuitAST parse_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_circuit(buf.str());
}

/// Canonical text; parse_circuit(render(ast)) == ast.
inline std::string render(const CircuitAST& ast) {
  std::ostringstream out;
  out << "qubits " << ast.n << "\n";
  for (const auto& op : ast.ops) {
    out << op.name << "(";
    for (std::size_t j = 0; j < op.qubits.size(); ++j) out << (j ? "," : "") << op.qubits[j];
    out << ")\n";
  }
  return out.str();
}

/// G_m ... G_1 for statements G_1 .. G_m (the first statement acts first).
inline ExactUnitary evaluate(const CircuitAST& ast, const Budget& budget = Budget::from_env()) {
  if (ast.n > budget.max_qubits) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(ast.n) + " qubits exceed the budget of " +
                                               std::to_string(budget.max_qubits));
  }
  ExactUnitary u = ExactUnitary::identity(ast.n);
  for (const auto& op : ast.ops) {
    const auto& sig = gate_table().at(op.name);
    u = embed(sig.make(), op.qubits, ast.n) * u;
  }
  return u;
}

}  // namespace climb
