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
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tabsynth/circuit.hpp"

namespace tabsynth {

/// Chain of m Toffolis on m + 2 qubits: CCX(i, i+1, i+2), expanded
/// into the standard 7-T / 6-CX decomposition.
inline Circuit toffoli_chain(std::size_t m) {
  if (m == 0) throw std::invalid_argument("toffoli_chain: need at least one");
  Circuit c(m + 2);
  for (std::size_t i = 0; i < m; ++i) append_ccx(c, i, i + 1, i + 2);
  return c;
}

/// Cuccaro-style ripple-carry adder on 2k + 2 qubits: carry-in at 0,
/// register pairs (b_i, a_i) interleaved, carry-out last. MAJ/UMA
/// blocks with the Toffolis expanded over Clifford+T.
inline Circuit ripple_adder(std::size_t k) {
  if (k == 0) throw std::invalid_argument("ripple_adder: need at least one bit");
  Circuit c(2 * k + 2);
  const auto a = [&](std::size_t i) { return 2 * i + 2; };
  const auto b = [&](std::size_t i) { return 2 * i + 1; };
  const std::size_t cin = 0, cout = 2 * k + 1;
  const auto maj = [&](std::size_t x, std::size_t y, std::size_t z) {
    c.add(GateKind::CX, z, y);
    c.add(GateKind::CX, z, x);
    append_ccx(c, x, y, z);
  };
  const auto uma = [&](std::size_t x, std::size_t y, std::size_t z) {
    append_ccx(c, x, y, z);
    c.add(GateKind::CX, z, x);
    c.add(GateKind::CX, x, y);
  };
  maj(cin, b(0), a(0));
  for (std::size_t i = 1; i < k; ++i) maj(a(i - 1), b(i), a(i));
  c.add(GateKind::CX, a(k - 1), cout);
  for (std::size_t i = k; i-- > 1;) uma(a(i - 1), b(i), a(i));
  uma(cin, b(0), a(0));
  return c;
}

/// Alternating family with h internal Hadamard walls: h repetitions of
/// [CX ladder, T layer, H wall] followed by a final CX ladder + T
/// layer, so every wall has non-Clifford content on both sides.
inline Circuit alt_ht(std::size_t n, std::size_t h) {
  if (n < 2) throw std::invalid_argument("alt_ht: need at least two qubits");
  Circuit c(n);
  const auto block = [&]() {
    for (std::size_t i = 0; i + 1 < n; ++i) c.add(GateKind::CX, i, i + 1);
    for (std::size_t i = 0; i < n; ++i) c.add(GateKind::T, i);
  };
  for (std::size_t wall = 0; wall < h; ++wall) {
    block();
    for (std::size_t i = 0; i < n; ++i) c.add(GateKind::H, i);
  }
  block();
  return c;
}

/// Random Clifford+T circuit: `depth` gates drawn from
/// {H, S, Sdg, CX, CZ, T, Tdg} with a CX/CZ share of roughly a third.
inline Circuit random_clifford_t(std::size_t n, std::size_t depth,
                                 std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_clifford_t: need two qubits");
  Circuit c(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
  for (std::size_t i = 0; i < depth; ++i) {
    const int k = kind(rng);
    if (k < 3) {  // two-qubit
      std::size_t q0 = qubit(rng), q1 = qubit(rng);
      while (q1 == q0) q1 = qubit(rng);
      c.add(k == 2 ? GateKind::CZ : GateKind::CX, q0, q1);
    } else if (k < 5) {
      c.add(GateKind::H, qubit(rng));
    } else if (k < 7) {
      c.add(k == 5 ? GateKind::S : GateKind::Sdg, qubit(rng));
    } else {
      c.add(k == 9 ? GateKind::Tdg : GateKind::T, qubit(rng));
    }
  }
  return c;
}

struct NamedCircuit {
  std::string name;
  Circuit circuit;
};

/// Fixed synthetic corpus (32 circuits, 2..8 qubits) spanning Toffoli
/// chains, ripple adders, alternating H/T blocks, and seeded random
/// Clifford+T circuits.
inline std::vector<NamedCircuit> synthetic_corpus() {
  std::vector<NamedCircuit> out;
  for (std::size_t m = 1; m <= 4; ++m)
    out.push_back({"toffoli_chain_" + std::to_string(m), toffoli_chain(m)});
  for (std::size_t k = 1; k <= 3; ++k)
    out.push_back({"ripple_adder_" + std::to_string(k), ripple_adder(k)});
  for (std::size_t n : {3, 4, 5, 6, 8})
    for (std::size_t h : {2, 4})
      out.push_back({"alt_ht_n" + std::to_string(n) + "_h" + std::to_string(h),
                     alt_ht(n, h)});
  for (std::size_t n : {2, 3, 4, 5, 6})
    for (std::uint64_t seed : {11u, 23u, 37u})
      out.push_back({"random_n" + std::to_string(n) + "_s" + std::to_string(seed),
                     random_clifford_t(n, 40, seed)});
  return out;
}

}  // namespace tabsynth
