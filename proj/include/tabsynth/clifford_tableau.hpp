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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tabsynth/circuit.hpp"
#include "tabsynth/pauli.hpp"

namespace tabsynth {

/**
 * Stabilizer tableau of a Clifford unitary U, stored as the signed
 * conjugation images of the generator Paulis: column q of the X block
 * is U X_q U^dagger, column q of the Z block is U Z_q U^dagger
 * (X images first, then Z images). The 2n columns satisfy the
 * symplectic condition: the X and Z images of the same qubit
 * anticommute, every other pair commutes.
 *
 * Composition naming follows circuit order: append(g) places g after
 * the represented circuit (U -> g U as operators), prepend(g) before it
 * (U -> U g).
 */
class CliffordTableau {
 public:
  explicit CliffordTableau(std::size_t n) : n_(n) {
    xcols_.reserve(n);
    zcols_.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
      xcols_.push_back(PauliString::single_x(n, q));
      zcols_.push_back(PauliString::single_z(n, q));
    }
  }

  static CliffordTableau identity(std::size_t n) { return CliffordTableau(n); }

  std::size_t num_qubits() const { return n_; }

  const PauliString& x_image(std::size_t q) const { return xcols_[q]; }
  const PauliString& z_image(std::size_t q) const { return zcols_[q]; }

  bool is_identity() const {
    for (std::size_t q = 0; q < n_; ++q) {
      if (!(xcols_[q] == PauliString::single_x(n_, q))) return false;
      if (!(zcols_[q] == PauliString::single_z(n_, q))) return false;
    }
    return true;
  }

  friend bool operator==(const CliffordTableau& a, const CliffordTableau& b) {
    return a.n_ == b.n_ && a.xcols_ == b.xcols_ && a.zcols_ == b.zcols_;
  }

  // --- gate application --------------------------------------------------

  /// U -> g U: conjugates every column by g. Only H, S and CX act as
  /// primitives; the remaining Clifford gates are composed from them.
  void append(const Gate& g) {
    switch (g.kind) {
      case GateKind::H:
        for_cols([&](PauliString& p) { p.conj_h(g.q0); });
        break;
      case GateKind::S:
        for_cols([&](PauliString& p) { p.conj_s(g.q0); });
        break;
      case GateKind::Sdg:  // S^3
        for_cols([&](PauliString& p) {
          p.conj_s(g.q0);
          p.conj_s(g.q0);
          p.conj_s(g.q0);
        });
        break;
      case GateKind::Z:  // S^2
        for_cols([&](PauliString& p) {
          p.conj_s(g.q0);
          p.conj_s(g.q0);
        });
        break;
      case GateKind::X:  // H S^2 H
        for_cols([&](PauliString& p) {
          p.conj_h(g.q0);
          p.conj_s(g.q0);
          p.conj_s(g.q0);
          p.conj_h(g.q0);
        });
        break;
      case GateKind::Y:  // conjugation by Z then X (phases cancel)
        for_cols([&](PauliString& p) {
          p.conj_s(g.q0);
          p.conj_s(g.q0);
          p.conj_h(g.q0);
          p.conj_s(g.q0);
          p.conj_s(g.q0);
          p.conj_h(g.q0);
        });
        break;
      case GateKind::CX:
        for_cols([&](PauliString& p) { p.conj_cx(g.q0, g.q1); });
        break;
      case GateKind::CZ:  // H_t CX H_t
        for_cols([&](PauliString& p) {
          p.conj_h(g.q1);
          p.conj_cx(g.q0, g.q1);
          p.conj_h(g.q1);
        });
        break;
      case GateKind::T:
      case GateKind::Tdg:
        throw std::invalid_argument("CliffordTableau: T gates are not Clifford");
    }
  }

  void append(GateKind k, std::size_t q) { append(Gate{k, static_cast<std::uint32_t>(q), 0}); }
  void append(GateKind k, std::size_t q0, std::size_t q1) {
    append(Gate{k, static_cast<std::uint32_t>(q0), static_cast<std::uint32_t>(q1)});
  }

  /// U -> U g: rewrites the generator columns through g's local action,
  /// i.e. column multiplications instead of bit conjugations.
  void prepend(const Gate& g) {
    switch (g.kind) {
      case GateKind::H:
        std::swap(xcols_[g.q0], zcols_[g.q0]);
        break;
      case GateKind::S:
        // S X S^dagger = Y = i X Z
        xcols_[g.q0] = signed_product(xcols_[g.q0], zcols_[g.q0], 1);
        break;
      case GateKind::Sdg:
        // Sdg X S = -Y = i^3 X Z
        xcols_[g.q0] = signed_product(xcols_[g.q0], zcols_[g.q0], 3);
        break;
      case GateKind::X:
        zcols_[g.q0].sign = !zcols_[g.q0].sign;
        break;
      case GateKind::Y:
        xcols_[g.q0].sign = !xcols_[g.q0].sign;
        zcols_[g.q0].sign = !zcols_[g.q0].sign;
        break;
      case GateKind::Z:
        xcols_[g.q0].sign = !xcols_[g.q0].sign;
        break;
      case GateKind::CX:
        // X_c -> X_c X_t, Z_t -> Z_c Z_t
        xcols_[g.q0] = signed_product(xcols_[g.q0], xcols_[g.q1], 0);
        zcols_[g.q1] = signed_product(zcols_[g.q0], zcols_[g.q1], 0);
        break;
      case GateKind::CZ:
        // X_a -> X_a Z_b, X_b -> X_b Z_a
        xcols_[g.q0] = signed_product(xcols_[g.q0], zcols_[g.q1], 0);
        xcols_[g.q1] = signed_product(xcols_[g.q1], zcols_[g.q0], 0);
        break;
      case GateKind::T:
      case GateKind::Tdg:
        throw std::invalid_argument("CliffordTableau: T gates are not Clifford");
    }
  }

  enum class Side { Append, Prepend };

  void apply_gate(const Gate& g, Side side) {
    side == Side::Append ? append(g) : prepend(g);
  }

  static CliffordTableau from_circuit(const Circuit& c) {
    CliffordTableau t(c.n);
    for (const Gate& g : c.gates) t.append(g);
    return t;
  }

  // --- algebra ------------------------------------------------------------

  /**
   * Image U p U^dagger of an arbitrary signed Pauli string: the signed
   * product of the stored generator images selected by p's bits. The
   * accumulated power of i must come out even; odd powers indicate a
   * non-Hermitian product and a corrupted tableau.
   */
  PauliString conjugate(const PauliString& p) const {
    if (p.num_qubits() != n_)
      throw std::invalid_argument("conjugate: qubit counts differ");
    PauliString acc(n_);
    // p = (-1)^sign i^{|Y positions|} prod X_q^{x_q} prod Z_q^{z_q}
    int k = (p.sign ? 2 : 0) + static_cast<int>(and_popcount(p.x, p.z) & 3);
    p.x.for_each_set([&](std::size_t q) { k += acc.mul_accumulate(xcols_[q]); });
    p.z.for_each_set([&](std::size_t q) { k += acc.mul_accumulate(zcols_[q]); });
    k &= 3;
    if (k & 1)
      throw std::logic_error("conjugate: non-Hermitian image (invalid tableau)");
    acc.sign = ((k >> 1) & 1) != 0;
    return acc;
  }

  /// Tableau of "first, then second" in circuit order (operators:
  /// U_second * U_first). Every column is second.conjugate(column of first).
  static CliffordTableau compose(const CliffordTableau& first,
                                 const CliffordTableau& second) {
    if (first.n_ != second.n_)
      throw std::invalid_argument("compose: qubit counts differ");
    CliffordTableau r(first.n_);
    for (std::size_t q = 0; q < first.n_; ++q) {
      r.xcols_[q] = second.conjugate(first.xcols_[q]);
      r.zcols_[q] = second.conjugate(first.zcols_[q]);
    }
    return r;
  }

  /**
   * Tableau of U^dagger. The bit matrix is the symplectic transpose;
   * each sign is then fixed by requiring conjugate(inverse image) to
   * reproduce the basis Pauli with a positive sign.
   */
  CliffordTableau inverse() const {
    CliffordTableau inv(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      PauliString px(n_), pz(n_);
      for (std::size_t r = 0; r < n_; ++r) {
        px.x.set(r, zcols_[r].z.get(j));
        px.z.set(r, xcols_[r].z.get(j));
        pz.x.set(r, zcols_[r].x.get(j));
        pz.z.set(r, xcols_[r].x.get(j));
      }
      inv.xcols_[j] = std::move(px);
      inv.zcols_[j] = std::move(pz);
    }
    for (std::size_t j = 0; j < n_; ++j) {
      inv.xcols_[j].sign = conjugate(inv.xcols_[j]).sign;
      inv.zcols_[j].sign = conjugate(inv.zcols_[j]).sign;
    }
    return inv;
  }

  /// True iff conjugation preserves the diagonal subgroup: every Z image
  /// is again a Z-type string. Such tableaux need no Hadamard to realize.
  bool is_hfree() const {
    for (std::size_t q = 0; q < n_; ++q)
      if (!zcols_[q].is_diagonal()) return false;
    return true;
  }

  /// Structural check used by tests: symplectic pairing of all columns.
  bool is_valid() const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (commutes(xcols_[i], zcols_[i])) return false;
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (!commutes(xcols_[i], xcols_[j])) return false;
        if (!commutes(zcols_[i], zcols_[j])) return false;
        if (!commutes(xcols_[i], zcols_[j])) return false;
        if (!commutes(zcols_[i], xcols_[j])) return false;
      }
    }
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t q = 0; q < n_; ++q) {
      s += "X" + std::to_string(q) + " -> " + xcols_[q].to_string() + "\n";
      s += "Z" + std::to_string(q) + " -> " + zcols_[q].to_string() + "\n";
    }
    return s;
  }

 private:
  template <typename Fn>
  void for_cols(Fn&& fn) {
    for (PauliString& p : xcols_) fn(p);
    for (PauliString& p : zcols_) fn(p);
  }

  /// a * b * i^extra as a signed Hermitian Pauli; throws if the total
  /// phase is imaginary.
  static PauliString signed_product(const PauliString& a, const PauliString& b,
                                    int extra) {
    auto [p, k] = multiply(a, b);
    k = (k + extra) & 3;
    if (k & 1)
      throw std::logic_error("signed_product: imaginary phase (invalid tableau)");
    p.sign = ((k >> 1) & 1) != 0;
    return p;
  }

  std::size_t n_;
  std::vector<PauliString> xcols_;
  std::vector<PauliString> zcols_;
};

}  // namespace tabsynth
