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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tabsynth {

/**
 * Fixed-width vector over GF(2), packed into 64-bit words.
 *
 * Bits beyond size() in the last word are kept zero; every operation
 * preserves that invariant so word-level scans need no masking.
 */
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  std::size_t word_count() const { return w_.size(); }
  std::uint64_t word(std::size_t i) const { return w_[i]; }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      w_[i >> 6] |= m;
    } else {
      w_[i >> 6] &= ~m;
    }
  }

  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  bool none() const {
    for (std::uint64_t w : w_)
      if (w) return false;
    return true;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Index of the lowest set bit; size() if none.
  std::size_t lowest_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return n_;
  }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        fn(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  friend std::size_t and_popcount(const BitVec& a, const BitVec& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(a.w_[i] & b.w_[i]));
    return c;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/**
 * Signed n-qubit Pauli string P = (-1)^sign P_1 ... P_n in the binary
 * encoding: qubit q carries Z iff z[q], X iff x[q], Y iff both, I iff
 * neither. Coefficients are restricted to +/-1; intermediate products
 * that pass through +/-i are exposed through the explicit phase
 * exponents returned by multiply().
 */
struct PauliString {
  BitVec z;
  BitVec x;
  bool sign = false;

  PauliString() = default;
  explicit PauliString(std::size_t n) : z(n), x(n) {}

  std::size_t num_qubits() const { return z.size(); }

  static PauliString identity(std::size_t n) { return PauliString(n); }

  static PauliString single_z(std::size_t n, std::size_t q) {
    if (q >= n) throw std::invalid_argument("single_z: qubit out of range");
    PauliString p(n);
    p.z.set(q, true);
    return p;
  }

  static PauliString single_x(std::size_t n, std::size_t q) {
    if (q >= n) throw std::invalid_argument("single_x: qubit out of range");
    PauliString p(n);
    p.x.set(q, true);
    return p;
  }

  /// True iff every qubit carries I or Z (a diagonal operator).
  bool is_diagonal() const { return x.none(); }

  bool is_identity() const { return z.none() && x.none(); }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.sign == b.sign && a.z == b.z && a.x == b.x;
  }

  /// Debug form, qubit 0 leftmost: e.g. "+ZIY", "-XX".
  std::string to_string() const {
    std::string s;
    s.reserve(num_qubits() + 1);
    s.push_back(sign ? '-' : '+');
    for (std::size_t q = 0; q < num_qubits(); ++q) {
      const bool zb = z.get(q), xb = x.get(q);
      s.push_back(zb ? (xb ? 'Y' : 'Z') : (xb ? 'X' : 'I'));
    }
    return s;
  }

  // --- conjugation primitives -------------------------------------------
  // In-place replacement of *this by G *this G^dagger for the generator
  // gates G in {H, S, CX}; all other Clifford gates are composed from
  // these three at the tableau level. Sign updates are exact.

  /// H: X<->Z, Y -> -Y.
  void conj_h(std::size_t q) {
    const bool zb = z.get(q), xb = x.get(q);
    sign ^= zb && xb;
    z.set(q, xb);
    x.set(q, zb);
  }

  /// S: X -> Y, Y -> -X, Z -> Z.
  void conj_s(std::size_t q) {
    const bool zb = z.get(q), xb = x.get(q);
    sign ^= zb && xb;
    if (xb) z.flip(q);
  }

  /// CX(c,t): X_c -> X_c X_t, Z_t -> Z_c Z_t, X_t and Z_c fixed.
  void conj_cx(std::size_t c, std::size_t t) {
    const bool xc = x.get(c), zc = z.get(c), xt = x.get(t), zt = z.get(t);
    sign ^= xc && zt && (xt == zc);
    x.set(t, xt ^ xc);
    z.set(c, zc ^ zt);
  }

  /**
   * Accumulate the product (*this) * rhs into *this, bits only,
   * returning the power of i contributed by the per-qubit Pauli
   * products and by rhs's sign (2 per negative sign). The caller owns
   * this object's own sign bit and the running exponent.
   */
  int mul_accumulate(const PauliString& rhs) {
    const int k = (phase_exponent(*this, rhs) + (rhs.sign ? 2 : 0)) & 3;
    z ^= rhs.z;
    x ^= rhs.x;
    return k;
  }

  /**
   * Power of i (mod 4) picked up when multiplying the per-qubit Paulis
   * of a and b, ignoring both sign bits: a_bits * b_bits =
   * i^k (a XOR b)_bits.
   */
  static int phase_exponent(const PauliString& a, const PauliString& b) {
    long long plus = 0, minus = 0;
    for (std::size_t i = 0; i < a.z.word_count(); ++i) {
      const std::uint64_t x1 = a.x.word(i), z1 = a.z.word(i);
      const std::uint64_t x2 = b.x.word(i), z2 = b.z.word(i);
      // Per qubit: +1 for the cyclic products XY, YZ, ZX; -1 for the
      // reversed ones. Every term masks each operand with at least one
      // stored word, so junk bits above size() never contribute.
      const std::uint64_t p =
          (x1 & ~z1 & x2 & z2) | (~x1 & z1 & x2 & ~z2) | (x1 & z1 & ~x2 & z2);
      const std::uint64_t m =
          (x1 & ~z1 & ~x2 & z2) | (~x1 & z1 & x2 & z2) | (x1 & z1 & x2 & ~z2);
      plus += std::popcount(p);
      minus += std::popcount(m);
    }
    return static_cast<int>(((plus - minus) % 4 + 4) % 4);
  }
};

/// True iff a and b commute (even symplectic inner product).
inline bool commutes(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("commutes: qubit counts differ");
  return ((and_popcount(a.x, b.z) + and_popcount(a.z, b.x)) & 1) == 0;
}

/**
 * Operator product a * b = i^k * result, where the returned string has
 * positive sign and k is reduced mod 4. For Hermitian inputs whose
 * product is again Hermitian, k is even and (-1)^(k/2) is the sign of
 * the product.
 */
inline std::pair<PauliString, int> multiply(const PauliString& a,
                                            const PauliString& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("multiply: qubit counts differ");
  PauliString r = a;
  int k = (a.sign ? 2 : 0) + r.mul_accumulate(b);
  r.sign = false;
  return {std::move(r), k & 3};
}

}  // namespace tabsynth
