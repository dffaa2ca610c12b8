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

#include <catch2/catch_amalgamated.hpp>
#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "tabsynth/generators.hpp"
#include "tabsynth/pipeline.hpp"
#include "tabsynth/resynth.hpp"
#include "test_util.hpp"

using tabsynth::Circuit;
using tabsynth::CliffordTableau;
using tabsynth::GateKind;
using tabsynth::HfreeSplit;
using tabsynth::PauliString;
using tabsynth::Pipeline;
using tabsynth::RotationTableau;
using tabsynth::SynthesisOutcome;

namespace {

bool uses_only(const Circuit& c, std::initializer_list<GateKind> kinds) {
  return std::all_of(c.gates.begin(), c.gates.end(), [&](const tabsynth::Gate& g) {
    return std::find(kinds.begin(), kinds.end(), g.kind) != kinds.end();
  });
}

/// Tableau of [split.hfree, H layer] — the emitted part of a split.
CliffordTableau emitted_tableau(const HfreeSplit& split) {
  Circuit c = split.hfree;
  for (std::size_t q : split.h_qubits) c.add(GateKind::H, q);
  return CliffordTableau::from_circuit(c);
}

}  // namespace

TEST_CASE("h-free synthesis round-trips exactly", "[resynth]") {
  SECTION("identity is empty") {
    CHECK(tabsynth::detail::synth_hfree_clifford(CliffordTableau::identity(3))
              .gates.empty());
  }
  SECTION("random h-free tableaux") {
    std::mt19937_64 rng(411);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(rng() % 6);
      CliffordTableau t = CliffordTableau::from_circuit(
          testutil::random_hfree_circuit(n, 4 * n + 6, rng));
      Circuit c = tabsynth::detail::synth_hfree_clifford(t);
      CHECK(CliffordTableau::from_circuit(c) == t);
      CHECK(uses_only(c, {GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Z,
                          GateKind::CX}));
    }
  }
  SECTION("hadamard content is rejected") {
    CliffordTableau t = CliffordTableau::identity(2);
    t.append(GateKind::H, 0);
    CHECK_THROWS_AS(tabsynth::detail::synth_hfree_clifford(t),
                    std::invalid_argument);
  }
}

TEST_CASE("split peels exactly the hadamard layer", "[resynth]") {
  SECTION("h-free input passes through untouched") {
    std::mt19937_64 rng(412);
    CliffordTableau t = CliffordTableau::from_circuit(
        testutil::random_hfree_circuit(4, 20, rng));
    HfreeSplit split = tabsynth::synth_hfree_split(t);
    CHECK(split.hfree.gates.empty());
    CHECK(split.h_qubits.empty());
    CHECK(split.residual == t);
  }
  SECTION("a lone h needs one layer qubit") {
    CliffordTableau t = CliffordTableau::identity(2);
    t.append(GateKind::H, 0);
    HfreeSplit split = tabsynth::synth_hfree_split(t);
    CHECK(split.h_qubits == std::vector<std::size_t>{0});
    CHECK(split.residual.is_hfree());
    CHECK(CliffordTableau::compose(emitted_tableau(split), split.residual) ==
          t);
  }
  SECTION("random tableaux recompose exactly") {
    std::mt19937_64 rng(413);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + static_cast<std::size_t>(rng() % 6);
      CliffordTableau t = CliffordTableau::from_circuit(
          testutil::random_clifford_circuit(n, 4 * n + 8, rng));
      HfreeSplit split = tabsynth::synth_hfree_split(t);

      CHECK(split.residual.is_hfree());
      CHECK(std::is_sorted(split.h_qubits.begin(), split.h_qubits.end()));
      CHECK(CliffordTableau::from_circuit(split.hfree).is_hfree());
      CHECK(CliffordTableau::compose(emitted_tableau(split), split.residual) ==
            t);
    }
  }
}

TEST_CASE("full clifford synthesis is exact over the closed gate set",
          "[resynth]") {
  CHECK(tabsynth::synth_clifford_full(CliffordTableau::identity(4))
            .gates.empty());

  std::mt19937_64 rng(414);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 6);
    CliffordTableau t = CliffordTableau::from_circuit(
        testutil::random_clifford_circuit(n, 5 * n + 5, rng));
    Circuit c = tabsynth::synth_clifford_full(t);
    CHECK(CliffordTableau::from_circuit(c) == t);
    CHECK(uses_only(c, {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X,
                        GateKind::Z, GateKind::CX}));
  }
}

TEST_CASE("diagonal synthesis emits one phase per parity", "[resynth]") {
  SECTION("single-qubit rotation is a bare phase gate") {
    RotationTableau s(2);
    s.add(PauliString::single_z(2, 0), 1);
    SynthesisOutcome out = tabsynth::synth_diagonal_prt(s);
    REQUIRE(out.circuit.gates.size() == 1);
    CHECK(out.circuit.gates[0].kind == GateKind::T);
    CHECK(out.circuit.gates[0].q0 == 0);
    CHECK(out.deferred.is_identity());
  }
  SECTION("joint parity folds with cx first") {
    RotationTableau s(2);
    PauliString p(2);
    p.z.set(0, true);
    p.z.set(1, true);
    s.add(p, 1);
    SynthesisOutcome out = tabsynth::synth_diagonal_prt(s);
    tabsynth::Metrics m = tabsynth::count_gates(out.circuit);
    CHECK(m.t_count == 1);
    CHECK(m.twoq_count == 1);
    CHECK_FALSE(out.deferred.is_identity());
    oracle::Mat got =
        oracle::mul(testutil::clifford_tableau_matrix(out.deferred),
                    oracle::circuit_matrix(out.circuit));
    CHECK(oracle::approx_equal_up_to_phase(
        got, testutil::rotation_tableau_matrix(s)));
  }
  SECTION("empty and trivial columns vanish") {
    RotationTableau s(2);
    SynthesisOutcome out = tabsynth::synth_diagonal_prt(s);
    CHECK(out.circuit.gates.empty());
    CHECK(out.deferred.is_identity());

    RotationTableau g(2);
    g.add(PauliString(2), 3);                  // identity parity
    g.add(PauliString::single_z(2, 1), 0);     // zero phase
    out = tabsynth::synth_diagonal_prt(g);
    CHECK(out.circuit.gates.empty());
    CHECK(out.deferred.is_identity());
  }
  SECTION("non-diagonal input is rejected") {
    RotationTableau s(1);
    s.add(PauliString::single_x(1, 0), 1);
    CHECK_THROWS_AS(tabsynth::synth_diagonal_prt(s), std::invalid_argument);
  }
  SECTION("random diagonal tableaux synthesize correctly") {
    std::mt19937_64 rng(415);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + static_cast<std::size_t>(rng() % 3);
      RotationTableau s(n);
      const int cols = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < cols; ++i) {
        PauliString p(n);
        for (std::size_t q = 0; q < n; ++q) p.z.set(q, (rng() & 1) != 0);
        s.add(p, static_cast<int>(rng() % 8));
      }
      SynthesisOutcome out = tabsynth::synth_diagonal_prt(s);

      // Identity-parity columns are global phase and emit nothing.
      std::size_t expected_t = 0;
      for (const tabsynth::RotationColumn& col : s.columns())
        if (!col.is_clifford() && !col.pauli.z.none()) ++expected_t;
      CHECK(tabsynth::count_gates(out.circuit).t_count == expected_t);
      CHECK(out.deferred.is_hfree());
      CHECK(out.deferred.is_valid());
      oracle::Mat got =
          oracle::mul(testutil::clifford_tableau_matrix(out.deferred),
                      oracle::circuit_matrix(out.circuit));
      CHECK(oracle::approx_equal_up_to_phase(
          got, testutil::rotation_tableau_matrix(s)));
    }
  }
}

TEST_CASE("both strategies reproduce the unitary", "[resynth]") {
  std::mt19937_64 rng(416);
  for (int trial = 0; trial < 8; ++trial) {
    Circuit c = tabsynth::random_clifford_t(3, 30, 700 + trial);
    Pipeline p = tabsynth::optimize_tcount(tabsynth::partition(c));
    oracle::Mat want = oracle::circuit_matrix(c);

    Circuit eager = tabsynth::eager_resynthesize(p);
    Circuit lazy = tabsynth::lazy_resynthesize(p);
    CHECK(oracle::approx_equal_up_to_phase(oracle::circuit_matrix(eager), want));
    CHECK(oracle::approx_equal_up_to_phase(oracle::circuit_matrix(lazy), want));
  }
}

TEST_CASE("resynthesis spends exactly the pipeline t budget", "[resynth]") {
  for (int seed : {801, 802, 803}) {
    Circuit c = tabsynth::random_clifford_t(4, 40, seed);
    Pipeline p = tabsynth::optimize_tcount(tabsynth::partition(c));
    const std::size_t budget = tabsynth::pipeline_stats(p).t_count;
    CHECK(tabsynth::count_gates(tabsynth::eager_resynthesize(p)).t_count ==
          budget);
    CHECK(tabsynth::count_gates(tabsynth::lazy_resynthesize(p)).t_count ==
          budget);
  }
}

TEST_CASE("clifford-only input resynthesizes to the same tableau",
          "[resynth]") {
  std::mt19937_64 rng(417);
  Circuit c = testutil::random_clifford_circuit(4, 25, rng);
  Pipeline p = tabsynth::optimize_tcount(tabsynth::partition(c));
  CliffordTableau want = CliffordTableau::from_circuit(c);
  CHECK(CliffordTableau::from_circuit(tabsynth::eager_resynthesize(p)) == want);
  CHECK(CliffordTableau::from_circuit(tabsynth::lazy_resynthesize(p)) == want);
}

TEST_CASE("outputs stay inside the clifford+t gate set without cz",
          "[resynth]") {
  const auto allowed = {GateKind::H, GateKind::S,  GateKind::Sdg,
                        GateKind::X, GateKind::Z,  GateKind::CX,
                        GateKind::T, GateKind::Tdg};
  for (int seed : {804, 805}) {
    Circuit c = tabsynth::random_clifford_t(4, 35, seed);
    Pipeline p = tabsynth::optimize_tcount(tabsynth::partition(c));
    CHECK(uses_only(tabsynth::eager_resynthesize(p), allowed));
    CHECK(uses_only(tabsynth::lazy_resynthesize(p), allowed));
  }
}

TEST_CASE("lazy defers the uncompute debt on alternating circuits",
          "[resynth]") {
  // On the alternating family the eager strategy pays each segment's
  // parity-network uncompute immediately; lazy merges it into the next
  // segment, so summed across the family it must not use more cx.
  std::size_t eager_total = 0, lazy_total = 0;
  for (std::size_t h : {4, 8, 16}) {
    Circuit c = tabsynth::alt_ht(6, h);
    Pipeline p = tabsynth::optimize_tcount(tabsynth::partition(c));
    Circuit eager = tabsynth::eager_resynthesize(p);
    Circuit lazy = tabsynth::lazy_resynthesize(p);
    eager_total += tabsynth::count_gates(eager).twoq_count;
    lazy_total += tabsynth::count_gates(lazy).twoq_count;
  }
  CHECK(lazy_total <= eager_total);
}
