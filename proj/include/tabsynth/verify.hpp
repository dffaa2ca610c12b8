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

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "tabsynth/circuit.hpp"
#include "tabsynth/clifford_tableau.hpp"

namespace tabsynth {

using Amplitude = std::complex<double>;
using State = std::vector<Amplitude>;

/// Hard caps and tolerances for desk-scale equivalence checking.
inline constexpr std::size_t kDenseMaxQubits = 10;
inline constexpr std::size_t kSampledMaxQubits = 14;
inline constexpr std::size_t kSampledTrials = 20;
inline constexpr double kDenseTol = 1e-9;
inline constexpr double kSampledInfidelityTol = 1e-9;

/// Apply one gate to a statevector. Qubit 0 is the least significant
/// bit of the basis index.
inline void apply_gate_to_state(State& psi, const Gate& g) {
  static const double kInvSqrt2 = 0.70710678118654752440;
  static const Amplitude kIUnit{0.0, 1.0};
  static const Amplitude kTPhase{kInvSqrt2, kInvSqrt2};
  const std::size_t dim = psi.size();
  const std::size_t m0 = std::size_t{1} << g.q0;
  switch (g.kind) {
    case GateKind::H:
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & m0) continue;
        const Amplitude a = psi[i], b = psi[i | m0];
        psi[i] = (a + b) * kInvSqrt2;
        psi[i | m0] = (a - b) * kInvSqrt2;
      }
      break;
    case GateKind::X:
      for (std::size_t i = 0; i < dim; ++i)
        if (!(i & m0)) std::swap(psi[i], psi[i | m0]);
      break;
    case GateKind::Y:
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & m0) continue;
        const Amplitude a = psi[i], b = psi[i | m0];
        psi[i] = -kIUnit * b;
        psi[i | m0] = kIUnit * a;
      }
      break;
    case GateKind::Z:
      for (std::size_t i = 0; i < dim; ++i)
        if (i & m0) psi[i] = -psi[i];
      break;
    case GateKind::S:
      for (std::size_t i = 0; i < dim; ++i)
        if (i & m0) psi[i] *= kIUnit;
      break;
    case GateKind::Sdg:
      for (std::size_t i = 0; i < dim; ++i)
        if (i & m0) psi[i] *= -kIUnit;
      break;
    case GateKind::T:
      for (std::size_t i = 0; i < dim; ++i)
        if (i & m0) psi[i] *= kTPhase;
      break;
    case GateKind::Tdg:
      for (std::size_t i = 0; i < dim; ++i)
        if (i & m0) psi[i] *= std::conj(kTPhase);
      break;
    case GateKind::CX: {
      const std::size_t m1 = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & m0) && !(i & m1)) std::swap(psi[i], psi[i | m1]);
      break;
    }
    case GateKind::CZ: {
      const std::size_t m1 = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & m0) && (i & m1)) psi[i] = -psi[i];
      break;
    }
  }
}

inline void apply_circuit_to_state(State& psi, const Circuit& c) {
  if (psi.size() != (std::size_t{1} << c.n))
    throw std::invalid_argument("apply_circuit_to_state: dimension mismatch");
  for (const Gate& g : c.gates) apply_gate_to_state(psi, g);
}

/// Full unitary as a vector of columns: result[j] == U |j>.
inline std::vector<State> unitary_of(const Circuit& c) {
  if (c.n > kDenseMaxQubits)
    throw std::invalid_argument("unitary_of: circuit too wide for dense form");
  const std::size_t dim = std::size_t{1} << c.n;
  std::vector<State> cols(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    cols[j].assign(dim, Amplitude{0.0, 0.0});
    cols[j][j] = Amplitude{1.0, 0.0};
    apply_circuit_to_state(cols[j], c);
  }
  return cols;
}

/**
 * Dense equivalence up to global phase. The phase is read off at the
 * entry of a with the largest magnitude (bounded below by 2^{-n/2}
 * since columns are unit vectors), then every entry must match within
 * tol.
 */
inline bool equivalent_dense(const Circuit& a, const Circuit& b,
                             double tol = kDenseTol) {
  if (a.n != b.n) return false;
  const std::vector<State> ua = unitary_of(a);
  const std::vector<State> ub = unitary_of(b);
  const std::size_t dim = ua.size();

  std::size_t bj = 0, bi = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i)
      if (std::abs(ua[j][i]) > best) {
        best = std::abs(ua[j][i]);
        bj = j;
        bi = i;
      }
  if (std::abs(ub[bj][bi]) < 1e-12) return false;
  Amplitude phase = ua[bj][bi] / ub[bj][bi];
  phase /= std::abs(phase);

  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i)
      if (std::abs(ua[j][i] - phase * ub[j][i]) > tol) return false;
  return true;
}

/// Haar-random single-qubit product state, built qubit by qubit so the
/// same seed always yields the same states.
inline State random_product_state(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  State psi{Amplitude{1.0, 0.0}};
  psi.reserve(std::size_t{1} << n);
  for (std::size_t q = 0; q < n; ++q) {
    const double theta = std::acos(1.0 - 2.0 * unif(rng));
    const double phi = 2.0 * 3.14159265358979323846 * unif(rng);
    const Amplitude alpha{std::cos(theta / 2.0), 0.0};
    const Amplitude beta = std::polar(std::sin(theta / 2.0), phi);
    const std::size_t sz = psi.size();
    psi.resize(sz * 2);
    for (std::size_t i = 0; i < sz; ++i) {
      psi[sz + i] = psi[i] * beta;
      psi[i] *= alpha;
    }
  }
  return psi;
}

/**
 * Sampled equivalence: both circuits run on the same random product
 * states and every trial must reach fidelity >= 1 - tol. One-sided
 * (can only certify inequivalence with certainty).
 */
inline bool equivalent_sampled(const Circuit& a, const Circuit& b,
                               std::size_t trials = kSampledTrials,
                               std::uint64_t seed = 0x7ab5u,
                               double tol = kSampledInfidelityTol) {
  if (a.n != b.n) return false;
  if (a.n > kSampledMaxQubits)
    throw std::invalid_argument("equivalent_sampled: circuit too wide");
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const State psi = random_product_state(a.n, rng);
    State pa = psi, pb = psi;
    apply_circuit_to_state(pa, a);
    apply_circuit_to_state(pb, b);
    Amplitude overlap{0.0, 0.0};
    for (std::size_t i = 0; i < pa.size(); ++i)
      overlap += std::conj(pa[i]) * pb[i];
    if (std::norm(overlap) < 1.0 - tol) return false;
  }
  return true;
}

inline bool is_clifford_circuit(const Circuit& c) {
  for (const Gate& g : c.gates)
    if (!is_clifford(g.kind)) return false;
  return true;
}

/// Exact tableau equality for Clifford-only circuits (any width).
inline bool equivalent_clifford(const Circuit& a, const Circuit& b) {
  if (a.n != b.n) return false;
  if (!is_clifford_circuit(a) || !is_clifford_circuit(b))
    throw std::invalid_argument("equivalent_clifford: non-Clifford gate");
  return CliffordTableau::from_circuit(a) == CliffordTableau::from_circuit(b);
}

enum class EquivalenceVerdict { Equal, NotEqual, Unverifiable };

struct EquivalenceReport {
  EquivalenceVerdict verdict = EquivalenceVerdict::Unverifiable;
  const char* method = "none";
};

/// Strongest check available at the given width: exact tableaux for
/// Clifford-only pairs, dense unitaries up to 10 qubits, sampled
/// product-state fidelity up to 14, unverifiable beyond. The seed only
/// affects the sampled path.
inline EquivalenceReport check_equivalent(const Circuit& a, const Circuit& b,
                                          std::uint64_t seed = 0x7ab5u) {
  if (a.n == b.n && is_clifford_circuit(a) && is_clifford_circuit(b))
    return {equivalent_clifford(a, b) ? EquivalenceVerdict::Equal
                                      : EquivalenceVerdict::NotEqual,
            "tableau"};
  if (a.n <= kDenseMaxQubits && b.n <= kDenseMaxQubits)
    return {equivalent_dense(a, b) ? EquivalenceVerdict::Equal
                                   : EquivalenceVerdict::NotEqual,
            "dense"};
  if (a.n <= kSampledMaxQubits && b.n <= kSampledMaxQubits)
    return {equivalent_sampled(a, b, kSampledTrials, seed)
                ? EquivalenceVerdict::Equal
                : EquivalenceVerdict::NotEqual,
            "sampled"};
  return {EquivalenceVerdict::Unverifiable, "none"};
}

}  // namespace tabsynth
