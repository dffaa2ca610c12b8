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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tabsynth {

enum class GateKind : std::uint8_t { H, S, Sdg, X, Y, Z, T, Tdg, CX, CZ };

inline bool is_two_qubit(GateKind k) {
  return k == GateKind::CX || k == GateKind::CZ;
}

/// Diagonal power of Z: S, Sdg, Z, T, Tdg (the gates a Pauli rotation
/// tableau absorbs during partitioning).
inline bool is_phase_gate(GateKind k) {
  switch (k) {
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Z:
    case GateKind::T:
    case GateKind::Tdg:
      return true;
    default:
      return false;
  }
}

inline bool is_clifford(GateKind k) {
  return k != GateKind::T && k != GateKind::Tdg;
}

/// Rotation exponent k of a phase gate, acting as R_Z(k*pi/4) up to
/// global phase.
inline int phase_exponent_of(GateKind k) {
  switch (k) {
    case GateKind::T:
      return 1;
    case GateKind::S:
      return 2;
    case GateKind::Z:
      return 4;
    case GateKind::Sdg:
      return 6;
    case GateKind::Tdg:
      return 7;
    default:
      throw std::invalid_argument("phase_exponent_of: not a phase gate");
  }
}

inline GateKind dagger(GateKind k) {
  switch (k) {
    case GateKind::S:
      return GateKind::Sdg;
    case GateKind::Sdg:
      return GateKind::S;
    case GateKind::T:
      return GateKind::Tdg;
    case GateKind::Tdg:
      return GateKind::T;
    default:
      return k;  // H, X, Y, Z, CX, CZ are self-inverse
  }
}

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "h";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::X:
      return "x";
    case GateKind::Y:
      return "y";
    case GateKind::Z:
      return "z";
    case GateKind::T:
      return "t";
    case GateKind::Tdg:
      return "tdg";
    case GateKind::CX:
      return "cx";
    case GateKind::CZ:
      return "cz";
  }
  return "?";
}

struct Gate {
  GateKind kind;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;  // target of CX / second operand of CZ; unused otherwise

  friend bool operator==(const Gate& a, const Gate& b) {
    if (a.kind != b.kind || a.q0 != b.q0) return false;
    return !is_two_qubit(a.kind) || a.q1 == b.q1;
  }
};

struct Circuit {
  std::size_t n = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(std::size_t n_qubits) : n(n_qubits) {}

  void add(GateKind k, std::size_t q) {
    check_qubit(q);
    if (is_two_qubit(k))
      throw std::invalid_argument("circuit: two-qubit gate needs two operands");
    gates.push_back({k, static_cast<std::uint32_t>(q), 0});
  }

  void add(GateKind k, std::size_t q0, std::size_t q1) {
    check_qubit(q0);
    check_qubit(q1);
    if (!is_two_qubit(k))
      throw std::invalid_argument("circuit: single-qubit gate takes one operand");
    if (q0 == q1)
      throw std::invalid_argument("circuit: two-qubit gate operands must differ");
    gates.push_back(
        {k, static_cast<std::uint32_t>(q0), static_cast<std::uint32_t>(q1)});
  }

  void append(const Circuit& other) {
    if (other.n != n)
      throw std::invalid_argument("circuit append: qubit counts differ");
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  }

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.n == b.n && a.gates == b.gates;
  }

 private:
  void check_qubit(std::size_t q) const {
    if (q >= n) throw std::out_of_range("circuit: qubit index out of range");
  }
};

/// Standard 6-CX, 7-T Toffoli decomposition (controls a, b; target c).
inline void append_ccx(Circuit& c, std::size_t a, std::size_t b, std::size_t t) {
  c.add(GateKind::H, t);
  c.add(GateKind::CX, b, t);
  c.add(GateKind::Tdg, t);
  c.add(GateKind::CX, a, t);
  c.add(GateKind::T, t);
  c.add(GateKind::CX, b, t);
  c.add(GateKind::Tdg, t);
  c.add(GateKind::CX, a, t);
  c.add(GateKind::T, b);
  c.add(GateKind::T, t);
  c.add(GateKind::H, t);
  c.add(GateKind::CX, a, b);
  c.add(GateKind::T, a);
  c.add(GateKind::Tdg, b);
  c.add(GateKind::CX, a, b);
}

/// CCZ as the Toffoli decomposition with the basis-change H pair dropped.
inline void append_ccz(Circuit& c, std::size_t a, std::size_t b, std::size_t t) {
  c.add(GateKind::CX, b, t);
  c.add(GateKind::Tdg, t);
  c.add(GateKind::CX, a, t);
  c.add(GateKind::T, t);
  c.add(GateKind::CX, b, t);
  c.add(GateKind::Tdg, t);
  c.add(GateKind::CX, a, t);
  c.add(GateKind::T, b);
  c.add(GateKind::T, t);
  c.add(GateKind::CX, a, b);
  c.add(GateKind::T, a);
  c.add(GateKind::Tdg, b);
  c.add(GateKind::CX, a, b);
}

inline void append_swap(Circuit& c, std::size_t a, std::size_t b) {
  c.add(GateKind::CX, a, b);
  c.add(GateKind::CX, b, a);
  c.add(GateKind::CX, a, b);
}

struct Metrics {
  std::size_t t_count = 0;
  std::size_t twoq_count = 0;
  std::size_t h_count = 0;
  std::size_t total = 0;
};

inline Metrics count_gates(const Circuit& c) {
  Metrics m;
  m.total = c.gates.size();
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::T || g.kind == GateKind::Tdg) ++m.t_count;
    if (is_two_qubit(g.kind)) ++m.twoq_count;
    if (g.kind == GateKind::H) ++m.h_count;
  }
  return m;
}

}  // namespace tabsynth
