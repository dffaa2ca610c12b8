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

// Independent dense-matrix oracle for the tests: explicit 2x2 gate
// matrices combined with Kronecker products and naive matrix products.
// Deliberately shares no code with the library's statevector engine so
// the two can check each other.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tabsynth/circuit.hpp"
#include "tabsynth/pauli.hpp"

namespace oracle {

using Cplx = std::complex<double>;
using Mat = std::vector<std::vector<Cplx>>;  // row-major

inline Mat zeros(std::size_t d) { return Mat(d, std::vector<Cplx>(d)); }

inline Mat eye(std::size_t d) {
  Mat m = zeros(d);
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t d = a.size();
  Mat r = zeros(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Cplx aik = a[i][k];
      if (aik == Cplx{}) continue;
      for (std::size_t j = 0; j < d; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

inline Mat add(const Mat& a, const Mat& b) {
  Mat r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j) r[i][j] += b[i][j];
  return r;
}

inline Mat scale(const Mat& a, Cplx s) {
  Mat r = a;
  for (auto& row : r)
    for (auto& v : row) v *= s;
  return r;
}

inline Mat dag(const Mat& a) {
  const std::size_t d = a.size();
  Mat r = zeros(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r[i][j] = std::conj(a[j][i]);
  return r;
}

/// kron(high, low): the right factor occupies the low-order index bits.
inline Mat kron(const Mat& hi, const Mat& lo) {
  const std::size_t dh = hi.size(), dl = lo.size();
  Mat r = zeros(dh * dl);
  for (std::size_t ih = 0; ih < dh; ++ih)
    for (std::size_t jh = 0; jh < dh; ++jh)
      for (std::size_t il = 0; il < dl; ++il)
        for (std::size_t jl = 0; jl < dl; ++jl)
          r[ih * dl + il][jh * dl + jl] = hi[ih][jh] * lo[il][jl];
  return r;
}

inline bool approx_equal(const Mat& a, const Mat& b, double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (std::abs(a[i][j] - b[i][j]) > tol) return false;
  return true;
}

/// Equality up to a global phase, read off the largest entry of a.
inline bool approx_equal_up_to_phase(const Mat& a, const Mat& b,
                                     double tol = 1e-9) {
  if (a.size() != b.size()) return false;
  std::size_t bi = 0, bj = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (std::abs(a[i][j]) > best) {
        best = std::abs(a[i][j]);
        bi = i;
        bj = j;
      }
  if (std::abs(b[bi][bj]) < 1e-12) return false;
  Cplx phase = a[bi][bj] / b[bi][bj];
  phase /= std::abs(phase);
  return approx_equal(a, scale(b, phase), tol);
}

inline const double kInvRoot2 = 1.0 / std::sqrt(2.0);

inline Mat m_i() { return {{1, 0}, {0, 1}}; }
inline Mat m_x() { return {{0, 1}, {1, 0}}; }
inline Mat m_y() { return {{0, Cplx{0, -1}}, {Cplx{0, 1}, 0}}; }
inline Mat m_z() { return {{1, 0}, {0, -1}}; }
inline Mat m_h() { return {{kInvRoot2, kInvRoot2}, {kInvRoot2, -kInvRoot2}}; }
inline Mat m_s() { return {{1, 0}, {0, Cplx{0, 1}}}; }
inline Mat m_sdg() { return {{1, 0}, {0, Cplx{0, -1}}}; }
inline Mat m_t() { return {{1, 0}, {0, Cplx{kInvRoot2, kInvRoot2}}}; }
inline Mat m_tdg() { return {{1, 0}, {0, Cplx{kInvRoot2, -kInvRoot2}}}; }
inline Mat m_p0() { return {{1, 0}, {0, 0}}; }
inline Mat m_p1() { return {{0, 0}, {0, 1}}; }

/// Embed a single-qubit matrix at qubit q (qubit 0 = least significant
/// index bit) of an n-qubit space.
inline Mat embed1(const Mat& g, std::size_t q, std::size_t n) {
  Mat m = {{1}};
  for (std::size_t k = n; k-- > 0;) m = kron(m, k == q ? g : m_i());
  return m;
}

inline Mat gate_matrix(const tabsynth::Gate& g, std::size_t n) {
  using tabsynth::GateKind;
  switch (g.kind) {
    case GateKind::H:
      return embed1(m_h(), g.q0, n);
    case GateKind::S:
      return embed1(m_s(), g.q0, n);
    case GateKind::Sdg:
      return embed1(m_sdg(), g.q0, n);
    case GateKind::X:
      return embed1(m_x(), g.q0, n);
    case GateKind::Y:
      return embed1(m_y(), g.q0, n);
    case GateKind::Z:
      return embed1(m_z(), g.q0, n);
    case GateKind::T:
      return embed1(m_t(), g.q0, n);
    case GateKind::Tdg:
      return embed1(m_tdg(), g.q0, n);
    case GateKind::CX:
      return add(mul(embed1(m_p0(), g.q0, n), eye(std::size_t{1} << n)),
                 mul(embed1(m_p1(), g.q0, n), embed1(m_x(), g.q1, n)));
    case GateKind::CZ:
      return add(mul(embed1(m_p0(), g.q0, n), eye(std::size_t{1} << n)),
                 mul(embed1(m_p1(), g.q0, n), embed1(m_z(), g.q1, n)));
  }
  throw std::logic_error("oracle: unknown gate");
}

/// Product of gate matrices in circuit order (first gate rightmost).
inline Mat circuit_matrix(const tabsynth::Circuit& c) {
  Mat u = eye(std::size_t{1} << c.n);
  for (const tabsynth::Gate& g : c.gates) u = mul(gate_matrix(g, c.n), u);
  return u;
}

/// Signed Pauli string as a dense matrix.
inline Mat pauli_matrix(const tabsynth::PauliString& p) {
  const std::size_t n = p.num_qubits();
  Mat m = {{1}};
  for (std::size_t k = n; k-- > 0;) {
    const bool zb = p.z.get(k), xb = p.x.get(k);
    m = kron(m, zb ? (xb ? m_y() : m_z()) : (xb ? m_x() : m_i()));
  }
  return p.sign ? scale(m, -1.0) : m;
}

/// Pauli rotation R_P(k*pi/4) = cos(theta/2) I - i sin(theta/2) P.
inline Mat rotation_matrix(const tabsynth::PauliString& p, int k) {
  const double theta = k * 3.14159265358979323846 / 4.0;
  const Mat pm = pauli_matrix(p);
  return add(scale(eye(pm.size()), std::cos(theta / 2.0)),
             scale(pm, Cplx{0.0, -std::sin(theta / 2.0)}));
}

/// The 8x8 Toffoli matrix (controls q0,q1, target q2) built as the
/// basis permutation t ^= c0 & c1.
inline Mat toffoli_matrix() {
  Mat m = zeros(8);
  for (std::size_t i = 0; i < 8; ++i) {
    const std::size_t j =
        ((i & 1) && (i & 2)) ? (i ^ 4) : i;  // flip bit 2 when bits 0,1 set
    m[j][i] = 1.0;
  }
  return m;
}

}  // namespace oracle
