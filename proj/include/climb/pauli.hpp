// Copyright 2026 The clifford-climb Authors
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

// Pauli operators on n qubits in the normal form i^c X(x) Z(z).
//
// Qubit 1 is the leftmost (most significant) tensor factor. The masks x and z
// use the basis-index layout: qubit q lives at bit (n - q), so X(x)|j> = |j^x>
// and Z(z)|j> = (-1)^{popcount(j & z)} |j>.

#include <bit>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "climb/error.hpp"
#include "climb/gf2.hpp"

namespace climb {

inline constexpr int kMaxPauliQubits = 31;

struct PauliOp {
  int n = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  int c = 0;  // phase exponent mod 4

  static PauliOp identity(int n) { return make(n, 0, 0, 0); }

  static PauliOp make(int n, std::uint64_t x, std::uint64_t z, int c) {
    if (n < 0 || n > kMaxPauliQubits) {
      throw Error(ErrorCode::Dimension, "unsupported qubit count " + std::to_string(n));
    }
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    if ((x & ~full) != 0 || (z & ~full) != 0) {
      throw Error(ErrorCode::Dimension, "Pauli mask exceeds qubit count");
    }
    return PauliOp{n, x, z, ((c % 4) + 4) % 4};
  }

  static std::uint64_t qubit_bit(int n, int qubit) { return std::uint64_t{1} << (n - qubit); }

  /// X on qubit q (1-based), identity elsewhere.
  static PauliOp x_on(int n, int qubit) { return make(n, qubit_bit(n, qubit), 0, 0); }
  static PauliOp z_on(int n, int qubit) { return make(n, 0, qubit_bit(n, qubit), 0); }

  bool x_at(int qubit) const { return (x >> (n - qubit)) & 1U; }
  bool z_at(int qubit) const { return (z >> (n - qubit)) & 1U; }

  bool is_identity_class() const { return x == 0 && z == 0; }

  /// Same (x, z) class, phase ignored.
  bool same_class(const PauliOp& o) const { return n == o.n && x == o.x && z == o.z; }

  friend bool operator==(const PauliOp& a, const PauliOp& b) = default;
};

inline void check_same_qubits(const PauliOp& p, const PauliOp& q) {
  if (p.n != q.n) {
    throw Error(ErrorCode::Dimension, "Pauli qubit counts differ: " + std::to_string(p.n) +
                                          " vs " + std::to_string(q.n));
  }
}

// Z(z1) X(x2) = (-1)^{z1.x2} X(x2) Z(z1)
inline PauliOp pauli_mul(const PauliOp& p, const PauliOp& q) {
  check_same_qubits(p, q);
  const int swap_sign = std::popcount(p.z & q.x) % 2;
  return PauliOp::make(p.n, p.x ^ q.x, p.z ^ q.z, p.c + q.c + 2 * swap_sign);
}

inline bool pauli_anticommute(const PauliOp& p, const PauliOp& q) {
  check_same_qubits(p, q);
  return (std::popcount(p.x & q.z) + std::popcount(p.z & q.x)) % 2 == 1;
}

inline bool is_hermitian(const PauliOp& p) { return p.c % 2 == std::popcount(p.x & p.z) % 2; }

/// Phase flip by -1.
inline PauliOp negated(const PauliOp& p) { return PauliOp::make(p.n, p.x, p.z, p.c + 2); }

// ---------------------------------------------------------------------------
// Symplectic vectors: length 2n, coordinates (a_1..a_n, b_1..b_n) with a_q the
// X part and b_q the Z part of qubit q.

using SymplecticVector = BitVec;

inline SymplecticVector to_symplectic(const PauliOp& p) {
  SymplecticVector v(2 * static_cast<std::size_t>(p.n));
  for (int q = 1; q <= p.n; ++q) {
    v.set(static_cast<std::size_t>(q - 1), p.x_at(q));
    v.set(static_cast<std::size_t>(p.n + q - 1), p.z_at(q));
  }
  return v;
}

inline bool symplectic_inner(const SymplecticVector& u, const SymplecticVector& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) {
    throw Error(ErrorCode::Dimension, "symplectic inner product needs equal even lengths");
  }
  const std::size_t n = u.size() / 2;
  bool acc = false;
  for (std::size_t j = 0; j < n; ++j) {
    acc ^= (u.get(j) && v.get(n + j)) != (u.get(n + j) && v.get(j));
  }
  return acc;
}

/// Hermitian representative E(a,b) = i^{a.b mod 2} X(a) Z(b).
inline PauliOp hermitian_rep(const SymplecticVector& v) {
  if (v.size() % 2 != 0) throw Error(ErrorCode::Dimension, "symplectic vector of odd length");
  const int n = static_cast<int>(v.size() / 2);
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int q = 1; q <= n; ++q) {
    if (v.get(static_cast<std::size_t>(q - 1))) x |= PauliOp::qubit_bit(n, q);
    if (v.get(static_cast<std::size_t>(n + q - 1))) z |= PauliOp::qubit_bit(n, q);
  }
  return PauliOp::make(n, x, z, std::popcount(x & z) % 2);
}

inline PauliOp hermitian_rep(int n, std::uint64_t x, std::uint64_t z) {
  return PauliOp::make(n, x, z, std::popcount(x & z) % 2);
}

// ---------------------------------------------------------------------------
// Enumeration of the 4^n phaseless classes (c = 0). Index t maps to
// x = t mod 2^n, z = t div 2^n, so n = 1 yields I, X, Z, XZ.

class PauliClassRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = PauliOp;
    using difference_type = std::ptrdiff_t;
    using pointer = const PauliOp*;
    using reference = PauliOp;

    iterator() = default;
    iterator(int n, std::uint64_t t) : n_(n), t_(t) {}

    PauliOp operator*() const {
      const std::uint64_t mask = (std::uint64_t{1} << n_) - 1;
      return PauliOp::make(n_, t_ & mask, t_ >> n_, 0);
    }
    iterator& operator++() {
      ++t_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++t_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.t_ == b.t_; }

   private:
    int n_ = 0;
    std::uint64_t t_ = 0;
  };

  explicit PauliClassRange(int n) : n_(n) {
    if (n < 1 || 2 * n > 62) {
      throw Error(ErrorCode::Dimension, "Pauli class enumeration needs 1 <= n <= 31");
    }
  }

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, std::uint64_t{1} << (2 * n_)}; }
  std::uint64_t size() const { return std::uint64_t{1} << (2 * n_); }

 private:
  int n_;
};

inline PauliClassRange enumerate_pauli_classes(int n) { return PauliClassRange(n); }

/// X_1..X_n then Z_1..Z_n.
inline std::vector<PauliOp> pauli_generators(int n) {
  std::vector<PauliOp> gens;
  gens.reserve(2 * static_cast<std::size_t>(n));
  for (int q = 1; q <= n; ++q) gens.push_back(PauliOp::x_on(n, q));
  for (int q = 1; q <= n; ++q) gens.push_back(PauliOp::z_on(n, q));
  return gens;
}

// ---------------------------------------------------------------------------
// Text form: optional phase prefix (+, -, +i, -i, i) then one letter per qubit
// from {I, X, Y, Z}. Y = iXZ, so the printed phase is i^{c - #Y}.

inline std::string to_string(const PauliOp& p) {
  std::string letters;
  letters.reserve(static_cast<std::size_t>(p.n));
  for (int q = 1; q <= p.n; ++q) {
    const bool xb = p.x_at(q);
    const bool zb = p.z_at(q);
    letters += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  const int phase = ((p.c - std::popcount(p.x & p.z)) % 4 + 4) % 4;
  static const char* const kPrefix[] = {"", "+i", "-", "-i"};
  return kPrefix[phase] + letters;
}

inline PauliOp parse_pauli(std::string text) {
  // Accept the Unicode minus sign as well.
  const std::string unicode_minus = "\xE2\x88\x92";
  if (text.rfind(unicode_minus, 0) == 0) text = "-" + text.substr(unicode_minus.size());
  int phase = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  const std::string letters = text.substr(pos);
  if (letters.empty()) throw Error(ErrorCode::ParseSyntax, "empty Pauli string");
  const int n = static_cast<int>(letters.size());
  if (n > kMaxPauliQubits) throw Error(ErrorCode::Dimension, "Pauli string too long");
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int q = 1; q <= n; ++q) {
    const std::uint64_t bit = PauliOp::qubit_bit(n, q);
    switch (letters[static_cast<std::size_t>(q - 1)]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Z': z |= bit; break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      default:
        throw Error(ErrorCode::ParseSyntax, "bad Pauli letter in '" + text + "'");
    }
  }
  return PauliOp::make(n, x, z, phase + std::popcount(x & z));
}

/// Bitstring of a mask, qubit 1 first.
inline std::string mask_to_bits(int n, std::uint64_t mask) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int q = 1; q <= n; ++q) {
    if ((mask >> (n - q)) & 1U) s[static_cast<std::size_t>(q - 1)] = '1';
  }
  return s;
}

inline std::uint64_t bits_to_mask(const std::string& bits) {
  const int n = static_cast<int>(bits.size());
  std::uint64_t mask = 0;
  for (int q = 1; q <= n; ++q) {
    const char ch = bits[static_cast<std::size_t>(q - 1)];
    if (ch == '1') {
      mask |= PauliOp::qubit_bit(n, q);
    } else if (ch != '0') {
      throw Error(ErrorCode::ParseSyntax, "bad bitstring '" + bits + "'");
    }
  }
  return mask;
}

}  // namespace climb
