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
#include <utility>
#include <vector>

#include "tabsynth/circuit.hpp"
#include "tabsynth/clifford_tableau.hpp"
#include "tabsynth/pauli.hpp"
#include "tabsynth/pipeline.hpp"
#include "tabsynth/rotation_tableau.hpp"

namespace tabsynth {

namespace detail {

/// Emit a gate, expanding CZ over {S, Sdg, CX} so synthesized circuits
/// stay inside {H, S, Sdg, X, Z, T, Tdg, CX}. The expansion is exact:
/// CZ = (S x S) . CX . (I x Sdg) . CX with no global phase.
inline void emit_gate(Circuit& c, const Gate& g) {
  if (g.kind == GateKind::CZ) {
    c.add(GateKind::S, g.q0);
    c.add(GateKind::S, g.q1);
    c.add(GateKind::CX, g.q0, g.q1);
    c.add(GateKind::Sdg, g.q1);
    c.add(GateKind::CX, g.q0, g.q1);
    return;
  }
  if (is_two_qubit(g.kind)) {
    c.add(g.kind, g.q0, g.q1);
  } else {
    c.add(g.kind, g.q0);
  }
}

/// Emit the phase gate(s) realizing diag(1, e^{i k pi/4}), k in [1, 8).
/// Odd k costs exactly one T or Tdg.
inline void emit_phase(Circuit& c, std::size_t q, int k) {
  switch (k & 7) {
    case 1:
      c.add(GateKind::T, q);
      break;
    case 2:
      c.add(GateKind::S, q);
      break;
    case 3:
      c.add(GateKind::S, q);
      c.add(GateKind::T, q);
      break;
    case 4:
      c.add(GateKind::Z, q);
      break;
    case 5:
      c.add(GateKind::Z, q);
      c.add(GateKind::T, q);
      break;
    case 6:
      c.add(GateKind::Sdg, q);
      break;
    case 7:
      c.add(GateKind::Tdg, q);
      break;
    default:
      break;  // k == 0 is the identity
  }
}

/// Incremental GF(2) basis with coordinate tracking: each stored row is
/// a vector reduced against all earlier rows together with its
/// expression over the inserted pivot tags.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t width) : width_(width) {}

  /// Reduce v against the basis. Returns {residual, combo}: the combo
  /// marks the pivot tags whose original vectors sum with the residual
  /// to v. A zero residual means v is dependent.
  std::pair<BitVec, BitVec> reduce(BitVec v) const {
    BitVec combo(width_);
    for (const Row& r : rows_) {
      if (v.get(r.lead)) {
        v ^= r.vec;
        combo ^= r.combo;
      }
    }
    return {std::move(v), std::move(combo)};
  }

  /// Insert an already-reduced nonzero residual under tag `tag`.
  void insert(BitVec residual, BitVec combo, std::size_t tag) {
    combo.flip(tag);
    const std::size_t lead = residual.lowest_set();
    rows_.push_back({std::move(residual), std::move(combo), lead});
  }

 private:
  struct Row {
    BitVec vec;
    BitVec combo;
    std::size_t lead;
  };

  std::size_t width_;
  std::vector<Row> rows_;
};

/**
 * Exact circuit for an H-free tableau over {CX, S, Sdg, X, Z} (CZ uses
 * are expanded). The tableau is reduced to the identity qubit by qubit
 * with appended gates, then the emitted list is reversed and daggered;
 * signs are fixed with X/Z along the way, so the round trip through
 * from_circuit reproduces the tableau exactly.
 */
inline Circuit synth_hfree_clifford(const CliffordTableau& t) {
  if (!t.is_hfree())
    throw std::invalid_argument("synth_hfree_clifford: tableau has H content");
  const std::size_t n = t.num_qubits();
  CliffordTableau m = t;
  std::vector<Gate> ops;
  const auto apply1 = [&](GateKind k, std::size_t q) {
    m.append(k, q);
    ops.push_back({k, static_cast<std::uint32_t>(q), 0});
  };
  const auto apply2 = [&](GateKind k, std::size_t a, std::size_t b) {
    m.append(k, a, b);
    ops.push_back({k, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
  };

  for (std::size_t q = 0; q < n; ++q) {
    // Z images stay diagonal under every op used here, so this column
    // is a product of Zs supported on rows >= q.
    if (!m.z_image(q).z.get(q)) {
      const std::size_t r = m.z_image(q).z.lowest_set();
      if (r < q || r >= n)
        throw std::logic_error("synth_hfree_clifford: malformed Z image");
      apply2(GateKind::CX, q, r);  // pulls row r's Z into row q
    }
    {
      std::vector<std::size_t> rows;
      m.z_image(q).z.for_each_set([&](std::size_t r) {
        if (r != q) rows.push_back(r);
      });
      for (std::size_t r : rows) {
        if (r < q) throw std::logic_error("synth_hfree_clifford: malformed Z image");
        apply2(GateKind::CX, r, q);
      }
    }
    if (m.z_image(q).sign) apply1(GateKind::X, q);

    // The X image must anticommute with Z_q, which pins an X at row q.
    if (!m.x_image(q).x.get(q))
      throw std::logic_error("synth_hfree_clifford: malformed X image");
    {
      std::vector<std::size_t> rows;
      m.x_image(q).x.for_each_set([&](std::size_t r) {
        if (r != q) rows.push_back(r);
      });
      for (std::size_t r : rows) {
        if (r < q) throw std::logic_error("synth_hfree_clifford: malformed X image");
        apply2(GateKind::CX, q, r);
      }
    }
    if (m.x_image(q).z.get(q)) apply1(GateKind::S, q);
    {
      std::vector<std::size_t> rows;
      m.x_image(q).z.for_each_set([&](std::size_t r) {
        if (r != q) rows.push_back(r);
      });
      for (std::size_t r : rows) {
        if (r < q) throw std::logic_error("synth_hfree_clifford: malformed X image");
        apply2(GateKind::CZ, q, r);
      }
    }
    if (m.x_image(q).sign) apply1(GateKind::Z, q);
  }
  if (!m.is_identity())
    throw std::logic_error("synth_hfree_clifford: reduction did not converge");

  Circuit out(n);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    Gate g = *it;
    g.kind = dagger(g.kind);
    emit_gate(out, g);
  }
  return out;
}

}  // namespace detail

/// Circuit plus a tableau whose synthesis was postponed:
/// unitary(input) == unitary(deferred) * unitary(circuit), i.e. the
/// deferred part belongs after the circuit in circuit order.
struct SynthesisOutcome {
  Circuit circuit;
  CliffordTableau deferred;
};

/// Split of a Clifford into an H-free prefix, one layer of Hadamards,
/// and an H-free residual tableau (circuit order: hfree, H layer,
/// residual).
struct HfreeSplit {
  Circuit hfree;
  std::vector<std::size_t> h_qubits;
  CliffordTableau residual;
};

/**
 * Peel a single Hadamard layer off a Clifford tableau.
 *
 * Phase 1 column-reduces the X block of the Z images by extracting CX
 * gates from the input side; the dependent columns become diagonal and
 * the pivot set B (one qubit per independent column, |B| = rank of the
 * X block) is exactly where Hadamards are unavoidable. Phase 2 clears
 * the X block of B's X images with extracted S/CZ gates; those columns
 * are forced into the span of the pivot Z images by the symplectic
 * relations, and the coordinate matrix is symmetric, so a diagonal of S
 * gates plus CZ pairs realizes it. Swapping X and Z images on B then
 * leaves an H-free residual.
 *
 * Exact composition: t == from_circuit(hfree), then H on h_qubits, then
 * residual.
 */
inline HfreeSplit synth_hfree_split(const CliffordTableau& t) {
  const std::size_t n = t.num_qubits();
  CliffordTableau work = t;
  Circuit hfree(n);

  const auto extract1 = [&](GateKind k, std::size_t q) {
    detail::emit_gate(hfree, {k, static_cast<std::uint32_t>(q), 0});
    work.prepend({dagger(k), static_cast<std::uint32_t>(q), 0});
  };
  const auto extract2 = [&](GateKind k, std::size_t a, std::size_t b) {
    detail::emit_gate(hfree, {k, static_cast<std::uint32_t>(a),
                              static_cast<std::uint32_t>(b)});
    work.prepend({dagger(k), static_cast<std::uint32_t>(a),
                  static_cast<std::uint32_t>(b)});
  };

  // Phase 1: make every non-pivot Z image diagonal.
  detail::Gf2Basis basis(n);
  std::vector<std::size_t> pivots;
  for (std::size_t q = 0; q < n; ++q) {
    auto [residual, combo] = basis.reduce(work.z_image(q).x);
    if (residual.none()) {
      combo.for_each_set([&](std::size_t b) { extract2(GateKind::CX, b, q); });
    } else {
      basis.insert(std::move(residual), std::move(combo), q);
      pivots.push_back(q);
    }
  }

  // Phase 2: clear the X block of the pivot X images. The coordinate
  // matrix over the pivot basis is symmetric, so S covers the diagonal
  // and one CZ covers each off-diagonal pair.
  std::vector<BitVec> coords;
  coords.reserve(pivots.size());
  for (std::size_t b : pivots) {
    auto [residual, combo] = basis.reduce(work.x_image(b).x);
    if (!residual.none())
      throw std::logic_error("synth_hfree_split: X image outside pivot span");
    coords.push_back(std::move(combo));
  }
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = i + 1; j < pivots.size(); ++j)
      if (coords[i].get(pivots[j]) != coords[j].get(pivots[i]))
        throw std::logic_error("synth_hfree_split: asymmetric phase coordinates");
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (coords[i].get(pivots[i])) extract1(GateKind::S, pivots[i]);
    for (std::size_t j = i + 1; j < pivots.size(); ++j)
      if (coords[i].get(pivots[j]))
        extract2(GateKind::CZ, pivots[i], pivots[j]);
  }

  for (std::size_t b : pivots) work.prepend({GateKind::H, static_cast<std::uint32_t>(b), 0});
  if (!work.is_hfree())
    throw std::logic_error("synth_hfree_split: residual is not H-free");

  return {std::move(hfree), std::move(pivots), std::move(work)};
}

/**
 * Exact circuit for an arbitrary Clifford tableau over
 * {H, S, Sdg, X, Z, CX}: one H-free prefix, one Hadamard layer, one
 * H-free core. from_circuit(result) == t including signs.
 */
inline Circuit synth_clifford_full(const CliffordTableau& t) {
  HfreeSplit split = synth_hfree_split(t);
  Circuit out = std::move(split.hfree);
  for (std::size_t q : split.h_qubits) out.add(GateKind::H, q);
  out.append(detail::synth_hfree_clifford(split.residual));
  return out;
}

/**
 * Synthesize a diagonal rotation tableau as a CX parity network with
 * one T-class phase emission per column. Columns are processed in
 * order; each parity is solved over the current linear state (rows of
 * parities held by the qubits), the pivot is the candidate qubit whose
 * held parity is Hamming-closest to the target (ties to the lowest
 * index), and the remaining coordinate qubits are CX-folded into it.
 * The accumulated CX network is returned, inverted, as the deferred
 * uncompute tableau: unitary(s) == unitary(deferred) * unitary(circuit)
 * up to global phase. Identity-parity columns are global phase and are
 * skipped.
 */
inline SynthesisOutcome synth_diagonal_prt(const RotationTableau& s) {
  if (!s.is_diagonal())
    throw std::invalid_argument("synth_diagonal_prt: tableau must be diagonal");
  const std::size_t n = s.num_qubits();
  Circuit circ(n);
  CliffordTableau lin = CliffordTableau::identity(n);

  // rows[q]: parity of inputs currently held by qubit q; rows_inv is
  // the inverse matrix, kept in step so each column solve is a row XOR.
  std::vector<BitVec> rows, rows_inv;
  rows.reserve(n);
  rows_inv.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    BitVec e(n);
    e.set(q, true);
    rows.push_back(e);
    rows_inv.push_back(std::move(e));
  }

  for (const RotationColumn& col : s.columns()) {
    const BitVec& v = col.pauli.z;
    if (v.none() || col.phase_k == 0) continue;

    // Coordinates of v over the current rows: (R^-1)^T v.
    BitVec coeff(n);
    v.for_each_set([&](std::size_t j) { coeff ^= rows_inv[j]; });

    std::size_t pivot = n;
    std::size_t best = n + 1;
    coeff.for_each_set([&](std::size_t i) {
      BitVec d = rows[i];
      d ^= v;
      const std::size_t dist = d.popcount();
      if (dist < best) {
        best = dist;
        pivot = i;
      }
    });
    if (pivot == n)
      throw std::logic_error("synth_diagonal_prt: unsolvable parity");

    coeff.for_each_set([&](std::size_t i) {
      if (i == pivot) return;
      circ.add(GateKind::CX, i, pivot);
      lin.append(GateKind::CX, i, pivot);
      rows[pivot] ^= rows[i];
      // rows_inv := rows_inv * (I + e_pivot e_i^T): column i ^= column pivot.
      for (std::size_t r = 0; r < n; ++r)
        if (rows_inv[r].get(pivot)) rows_inv[r].flip(i);
    });
    if (!(rows[pivot] == v))
      throw std::logic_error("synth_diagonal_prt: parity accumulation failed");

    detail::emit_phase(circ, pivot, col.phase_k);
  }

  return {std::move(circ), lin.inverse()};
}

/**
 * Segment-at-a-time resynthesis: each rotation tableau is synthesized
 * and its uncompute network paid for immediately, then the segment
 * Clifford is emitted as H-free prefix + H layer + fully synthesized
 * residual.
 */
inline Circuit eager_resynthesize(const Pipeline& p) {
  Circuit out(p.n);
  for (const Segment& seg : p.segments) {
    SynthesisOutcome rot = synth_diagonal_prt(seg.prt);
    out.append(rot.circuit);
    out.append(synth_clifford_full(rot.deferred));

    HfreeSplit split = synth_hfree_split(seg.cliff);
    out.append(split.hfree);
    for (std::size_t q : split.h_qubits) out.add(GateKind::H, q);
    out.append(detail::synth_hfree_clifford(split.residual));
  }
  return out;
}

/**
 * Deferred resynthesis: a carried Clifford tableau D floats at the
 * emission frontier. Per segment, the rotations are pulled in front of
 * D by conjugating with D^-1 and refolded (the fold residue joins the
 * deferred stack); only the parity network is emitted. The uncompute
 * tableau, fold residue, D and the segment Clifford merge into one
 * tableau, which gives up just its Hadamard layer; the H-free residual
 * becomes the next D. One full Clifford synthesis at the very end pays
 * the remaining debt and realizes the accumulated Pauli byproducts as
 * X/Z gates.
 */
inline Circuit lazy_resynthesize(const Pipeline& p) {
  Circuit out(p.n);
  CliffordTableau d = CliffordTableau::identity(p.n);
  for (const Segment& seg : p.segments) {
    RotationTableau rot = seg.prt;
    rot.conjugate_by(d.inverse());
    FoldResult fold = rot.fold_phases();

    SynthesisOutcome outcome = synth_diagonal_prt(fold.folded);
    out.append(outcome.circuit);

    // Pending, in circuit order: uncompute, fold residue, D, segment Clifford.
    CliffordTableau merged = CliffordTableau::compose(
        outcome.deferred,
        CliffordTableau::compose(fold.residue,
                                 CliffordTableau::compose(d, seg.cliff)));

    HfreeSplit split = synth_hfree_split(merged);
    out.append(split.hfree);
    for (std::size_t q : split.h_qubits) out.add(GateKind::H, q);
    d = std::move(split.residual);
  }
  out.append(synth_clifford_full(d));
  return out;
}

}  // namespace tabsynth
