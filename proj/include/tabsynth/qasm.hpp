// Copyright 2026 The tabsynth authors
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

#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tabsynth/circuit.hpp"

namespace tabsynth {

/// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg)
      : std::runtime_error("qasm:" + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

namespace detail {

struct QasmLexer {
  std::string_view src;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  explicit QasmLexer(std::string_view s) : src(s) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col, msg);
  }

  void advance() {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_space() {
    while (pos < src.size()) {
      const char c = src[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos + 1 < src.size() && src[pos + 1] == '/') {
        while (pos < src.size() && src[pos] != '\n') advance();
      } else {
        return;
      }
    }
  }

  bool eof() {
    skip_space();
    return pos >= src.size();
  }

  char peek() {
    skip_space();
    return pos < src.size() ? src[pos] : '\0';
  }

  void expect(char c) {
    skip_space();
    if (pos >= src.size() || src[pos] != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  bool accept(char c) {
    skip_space();
    if (pos < src.size() && src[pos] == c) {
      advance();
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_space();
    if (pos >= src.size() || !(std::isalpha(static_cast<unsigned char>(src[pos])) ||
                               src[pos] == '_'))
      fail("expected identifier");
    std::string s;
    while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                                src[pos] == '_')) {
      s.push_back(src[pos]);
      advance();
    }
    return s;
  }

  std::size_t integer() {
    skip_space();
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      fail("expected integer");
    std::size_t v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + static_cast<std::size_t>(src[pos] - '0');
      advance();
    }
    return v;
  }

  std::string quoted_string() {
    skip_space();
    if (pos >= src.size() || src[pos] != '"') fail("expected string literal");
    advance();
    std::string s;
    while (pos < src.size() && src[pos] != '"') {
      s.push_back(src[pos]);
      advance();
    }
    if (pos >= src.size()) fail("unterminated string literal");
    advance();
    return s;
  }
};

}  // namespace detail

/**
 * Parse the supported OpenQASM 2.0 subset: a version header, an optional
 * include, exactly one quantum register, and applications of
 * h/s/sdg/x/y/z/t/tdg/cx/cz plus ccx/ccz/swap (expanded into the
 * Clifford+T gate set on the fly). Anything else, including classical
 * registers, measurement, and parametrized rotations such as rz(theta),
 * is rejected with a positioned ParseError.
 */
inline Circuit parse_qasm(std::string_view text) {
  detail::QasmLexer lx(text);

  lx.skip_space();
  if (lx.ident() != "OPENQASM") lx.fail("expected OPENQASM header");
  {
    const std::size_t major = lx.integer();
    lx.expect('.');
    const std::size_t minor = lx.integer();
    if (major != 2 || minor != 0) lx.fail("unsupported OPENQASM version");
  }
  lx.expect(';');

  Circuit circ;
  bool have_qreg = false;
  std::string reg_name;

  const auto parse_operand = [&](std::size_t stmt_line, std::size_t stmt_col) {
    const std::string name = lx.ident();
    if (!have_qreg) lx.fail("qubit operand before qreg declaration");
    if (name != reg_name) lx.fail("unknown register '" + name + "'");
    if (!lx.accept('['))
      throw ParseError(stmt_line, stmt_col,
                       "operand must be indexed, e.g. " + reg_name + "[0]");
    const std::size_t idx = lx.integer();
    lx.expect(']');
    if (idx >= circ.n)
      lx.fail("qubit index " + std::to_string(idx) + " out of range (size " +
              std::to_string(circ.n) + ")");
    return idx;
  };

  while (!lx.eof()) {
    const std::size_t stmt_line = lx.line, stmt_col = lx.col;
    const std::string word = lx.ident();

    if (word == "include") {
      lx.quoted_string();
      lx.expect(';');
      continue;
    }
    if (word == "qreg") {
      if (have_qreg)
        throw ParseError(stmt_line, stmt_col,
                         "only a single quantum register is supported");
      reg_name = lx.ident();
      lx.expect('[');
      const std::size_t n = lx.integer();
      lx.expect(']');
      lx.expect(';');
      if (n == 0) throw ParseError(stmt_line, stmt_col, "empty register");
      circ = Circuit(n);
      have_qreg = true;
      continue;
    }
    if (word == "creg" || word == "measure" || word == "reset" ||
        word == "barrier" || word == "if" || word == "gate" || word == "opaque") {
      throw ParseError(stmt_line, stmt_col,
                       "'" + word + "' is not supported (unitary Clifford+T subset only)");
    }

    GateKind kind;
    std::size_t arity = 0;
    enum class Macro { None, Ccx, Ccz, Swap } macro = Macro::None;
    if (word == "h") {
      kind = GateKind::H;
      arity = 1;
    } else if (word == "s") {
      kind = GateKind::S;
      arity = 1;
    } else if (word == "sdg") {
      kind = GateKind::Sdg;
      arity = 1;
    } else if (word == "x") {
      kind = GateKind::X;
      arity = 1;
    } else if (word == "y") {
      kind = GateKind::Y;
      arity = 1;
    } else if (word == "z") {
      kind = GateKind::Z;
      arity = 1;
    } else if (word == "t") {
      kind = GateKind::T;
      arity = 1;
    } else if (word == "tdg") {
      kind = GateKind::Tdg;
      arity = 1;
    } else if (word == "cx") {
      kind = GateKind::CX;
      arity = 2;
    } else if (word == "cz") {
      kind = GateKind::CZ;
      arity = 2;
    } else if (word == "ccx") {
      macro = Macro::Ccx;
      arity = 3;
    } else if (word == "ccz") {
      macro = Macro::Ccz;
      arity = 3;
    } else if (word == "swap") {
      macro = Macro::Swap;
      arity = 2;
    } else if (word == "rz" || word == "rx" || word == "ry" || word == "u1" ||
               word == "u2" || word == "u3" || word == "u") {
      throw ParseError(stmt_line, stmt_col,
                       "'" + word +
                           "' with arbitrary angle is not representable in the "
                           "Clifford+T gate set");
    } else {
      throw ParseError(stmt_line, stmt_col, "unsupported gate '" + word + "'");
    }

    std::vector<std::size_t> qs;
    qs.push_back(parse_operand(stmt_line, stmt_col));
    for (std::size_t i = 1; i < arity; ++i) {
      lx.expect(',');
      qs.push_back(parse_operand(stmt_line, stmt_col));
    }
    lx.expect(';');

    for (std::size_t i = 0; i < qs.size(); ++i)
      for (std::size_t j = i + 1; j < qs.size(); ++j)
        if (qs[i] == qs[j])
          throw ParseError(stmt_line, stmt_col, "duplicate qubit operand");

    switch (macro) {
      case Macro::None:
        if (arity == 1) {
          circ.add(kind, qs[0]);
        } else {
          circ.add(kind, qs[0], qs[1]);
        }
        break;
      case Macro::Ccx:
        append_ccx(circ, qs[0], qs[1], qs[2]);
        break;
      case Macro::Ccz:
        append_ccz(circ, qs[0], qs[1], qs[2]);
        break;
      case Macro::Swap:
        append_swap(circ, qs[0], qs[1]);
        break;
    }
  }

  if (!have_qreg) throw ParseError(lx.line, lx.col, "missing qreg declaration");
  return circ;
}

/// Serialize in the same subset; parse_qasm(write_qasm(c)) reproduces c
/// gate for gate.
inline std::string write_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "qreg q[" << c.n << "];\n";
  for (const Gate& g : c.gates) {
    out << gate_name(g.kind) << " q[" << g.q0 << "]";
    if (is_two_qubit(g.kind)) out << ",q[" << g.q1 << "]";
    out << ";\n";
  }
  return out.str();
}

}  // namespace tabsynth
