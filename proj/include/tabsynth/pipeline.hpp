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
#include <functional>
#include <utility>
#include <vector>

#include "tabsynth/circuit.hpp"
#include "tabsynth/clifford_tableau.hpp"
#include "tabsynth/rotation_tableau.hpp"

namespace tabsynth {

/**
 * One slice of the alternating form: a diagonal Pauli rotation tableau
 * followed (in circuit order) by a Clifford tableau.
 */
struct Segment {
  RotationTableau prt;
  CliffordTableau cliff;
};

/// Alternating rotation/Clifford form of a circuit; segments apply in order.
struct Pipeline {
  std::size_t n = 0;
  std::vector<Segment> segments;
};

/**
 * Sweep the circuit once, absorbing Clifford gates into an accumulated
 * tableau C and pushing every phase gate on qubit q to the front of its
 * segment as the rotation (C^dagger Z_q C, k). While that conjugated
 * Pauli stays diagonal it joins the current segment's rotation tableau;
 * the first non-diagonal one closes the segment and opens a new one.
 * X and Y are kept in C (they are not phase gates); an empty circuit
 * yields a single segment with an empty tableau pair.
 */
inline Pipeline partition(const Circuit& c) {
  Pipeline p;
  p.n = c.n;

  CliffordTableau cliff = CliffordTableau::identity(c.n);
  CliffordTableau cliff_inv = CliffordTableau::identity(c.n);
  RotationTableau prt(c.n);

  const auto close_segment = [&]() {
    p.segments.push_back({std::move(prt), std::move(cliff)});
    cliff = CliffordTableau::identity(c.n);
    cliff_inv = CliffordTableau::identity(c.n);
    prt = RotationTableau(c.n);
  };

  for (const Gate& g : c.gates) {
    if (is_phase_gate(g.kind)) {
      const int k = phase_exponent_of(g.kind);
      // The gate acts after the accumulated Clifford; pushed before it,
      // its axis Z_q becomes the inverse image C^dagger Z_q C.
      PauliString axis = cliff_inv.z_image(g.q0);
      if (!axis.is_diagonal()) {
        close_segment();
        axis = PauliString::single_z(c.n, g.q0);
      }
      prt.add(std::move(axis), k);
    } else {
      cliff.append(g);
      Gate inv = g;
      inv.kind = dagger(g.kind);
      cliff_inv.prepend(inv);
    }
  }
  close_segment();
  return p;
}

/// Strategy seam for the per-segment T-count pass: maps a diagonal
/// rotation tableau to an equivalent (folded tableau, Clifford residue)
/// pair. The default is RotationTableau::fold_phases.
using PhaseOptimizer =
    std::function<FoldResult(const RotationTableau&)>;

inline FoldResult default_phase_optimizer(
    const RotationTableau& s) {
  return s.fold_phases();
}

/**
 * Fold every segment's rotation tableau; each Clifford residue is
 * composed into that segment's tableau, in circuit order residue first,
 * then the original Clifford. The total unitary is unchanged, and the
 * pipeline T-count never increases.
 */
inline Pipeline optimize_tcount(Pipeline p,
                                const PhaseOptimizer& opt = default_phase_optimizer) {
  for (Segment& s : p.segments) {
    if (s.prt.empty()) continue;
    FoldResult f = opt(s.prt);
    s.prt = std::move(f.folded);
    s.cliff = CliffordTableau::compose(f.residue, s.cliff);
  }
  return p;
}

struct PipelineStats {
  std::size_t t_count = 0;
  std::size_t segment_count = 0;
  std::size_t max_prt_width = 0;  // most rotation columns in any segment
};

inline PipelineStats pipeline_stats(const Pipeline& p) {
  PipelineStats st;
  st.segment_count = p.segments.size();
  for (const Segment& s : p.segments) {
    st.t_count += s.prt.t_count();
    if (s.prt.size() > st.max_prt_width) st.max_prt_width = s.prt.size();
  }
  return st;
}

}  // namespace tabsynth
