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
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tabsynth/clifford_tableau.hpp"
#include "tabsynth/pauli.hpp"

namespace tabsynth {

/**
 * One Pauli rotation R_P(k*pi/4) = exp(-i k pi/8 P). The stored Pauli
 * is always positive: a negative sign is absorbed by negating the
 * phase, since R_{-P}(theta) = R_P(-theta). k lives in Z_8; the
 * rotation is non-Clifford exactly when k is odd.
 */
struct RotationColumn {
  PauliString pauli;
  int phase_k = 0;

  RotationColumn(PauliString p, int k) : pauli(std::move(p)) {
    k &= 7;
    if (pauli.sign) {
      k = (8 - k) & 7;
      pauli.sign = false;
    }
    phase_k = k;
  }

  bool is_clifford() const { return (phase_k & 1) == 0; }

  friend bool operator==(const RotationColumn& a, const RotationColumn& b) {
    return a.phase_k == b.phase_k && a.pauli == b.pauli;
  }
};

struct FoldResult;

/**
 * A sequence of Pauli rotations ("Pauli rotation tableau"): columns are
 * applied in order, although a diagonal tableau is order-independent
 * since all its rotations commute.
 */
class RotationTableau {
 public:
  explicit RotationTableau(std::size_t n) : n_(n) {}

  std::size_t num_qubits() const { return n_; }
  std::size_t size() const { return cols_.size(); }
  bool empty() const { return cols_.empty(); }
  const RotationColumn& column(std::size_t i) const { return cols_[i]; }
  const std::vector<RotationColumn>& columns() const { return cols_; }

  /// Append a rotation; the column constructor absorbs negative signs.
  void add(PauliString p, int k) {
    if (p.num_qubits() != n_)
      throw std::invalid_argument("rotation tableau: qubit counts differ");
    cols_.emplace_back(std::move(p), k);
  }

  bool is_diagonal() const {
    for (const RotationColumn& c : cols_)
      if (!c.pauli.is_diagonal()) return false;
    return true;
  }

  /// Number of non-Clifford columns (odd phase); each costs one T gate.
  std::size_t t_count() const {
    std::size_t t = 0;
    for (const RotationColumn& c : cols_)
      if (!c.is_clifford()) ++t;
    return t;
  }

  /// Replace every column P by t.conjugate(P), folding signs into phases.
  void conjugate_by(const CliffordTableau& t) {
    if (t.num_qubits() != n_)
      throw std::invalid_argument("conjugate_by: qubit counts differ");
    for (RotationColumn& c : cols_) {
      PauliString p = t.conjugate(c.pauli);
      c = RotationColumn(std::move(p), c.phase_k);
    }
  }

  /**
   * Phase folding of a diagonal tableau. Columns with identical Z
   * vectors merge by adding phases mod 8; merged columns with phase 0
   * vanish, even phases are extracted into a residue Clifford tableau
   * (S^(k/2) on the rotation's parity, realized as a CX-conjugated
   * phase gate), and odd phases survive in first-occurrence order. The
   * result has pairwise-distinct Z vectors, all with odd phase, so its
   * column count equals its T-count. Columns on the identity parity are
   * pure global phase and are dropped.
   *
   * unitary(this) == unitary(residue) * unitary(folded) as operators,
   * up to global phase (everything here is diagonal and commutes).
   */
  FoldResult fold_phases() const;

  std::string to_string() const {
    std::string s;
    for (const RotationColumn& c : cols_)
      s += c.pauli.to_string() + " : " + std::to_string(c.phase_k) + "\n";
    return s;
  }

 private:
  /// Append exp(-i m pi/4 Z^v) to the tableau: fold the parity v onto
  /// its lowest qubit with CX, apply S^m there, then uncompute.
  static void apply_parity_phase(CliffordTableau& t, const BitVec& v, int m) {
    const std::size_t pivot = v.lowest_set();
    std::vector<std::size_t> others;
    v.for_each_set([&](std::size_t q) {
      if (q != pivot) others.push_back(q);
    });
    for (std::size_t q : others) t.append(GateKind::CX, q, pivot);
    for (int i = 0; i < m; ++i) t.append(GateKind::S, pivot);
    for (auto it = others.rbegin(); it != others.rend(); ++it)
      t.append(GateKind::CX, *it, pivot);
  }

  std::size_t n_;
  std::vector<RotationColumn> cols_;
};

struct FoldResult {
  RotationTableau folded;
  CliffordTableau residue;
};

inline FoldResult RotationTableau::fold_phases() const {
  if (!is_diagonal())
    throw std::invalid_argument("fold_phases: tableau must be diagonal");

  std::vector<std::pair<BitVec, int>> groups;  // first-occurrence order
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (const RotationColumn& c : cols_) {
    const auto [it, inserted] =
        index.try_emplace(c.pauli.z.words(), groups.size());
    if (inserted) {
      groups.emplace_back(c.pauli.z, c.phase_k);
    } else {
      auto& slot = groups[it->second];
      slot.second = (slot.second + c.phase_k) & 7;
    }
  }

  FoldResult r{RotationTableau(n_), CliffordTableau(n_)};
  for (auto& [zvec, k] : groups) {
    if (k == 0 || zvec.none()) continue;
    if (k & 1) {
      PauliString p(n_);
      p.z = zvec;
      r.folded.add(std::move(p), k);
    } else {
      apply_parity_phase(r.residue, zvec, k >> 1);
    }
  }
  return r;
}

}  // namespace tabsynth
