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

// Exact scalars of Z[w, 1/sqrt2] with w = exp(i*pi/4).
//
// A value is (a + b*w + c*w^2 + d*w^3) / sqrt2^k. Every gate used by the
// library (Paulis, Cliffords, square roots (I+iU)/sqrt2, controlled gates)
// has entries of this shape, so no floating point is ever involved.

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace climb {

using BigInt = boost::multiprecision::cpp_int;

namespace ring_detail {

using Numerator = std::array<BigInt, 4>;

inline bool is_odd(const BigInt& v) { return boost::multiprecision::bit_test(v, 0); }

inline bool all_even(const Numerator& x) {
  return !is_odd(x[0]) && !is_odd(x[1]) && !is_odd(x[2]) && !is_odd(x[3]);
}

inline bool all_zero(const Numerator& x) {
  return x[0].is_zero() && x[1].is_zero() && x[2].is_zero() && x[3].is_zero();
}

// sqrt2 = w - w^3, so sqrt2 * (p0,p1,p2,p3) = (p1-p3, p0+p2, p1+p3, p2-p0).
inline Numerator times_sqrt2(const Numerator& p) {
  return {p[1] - p[3], p[0] + p[2], p[1] + p[3], p[2] - p[0]};
}

// Inverse of times_sqrt2; exact iff x0 = x2 and x1 = x3 (mod 2).
inline bool divisible_by_sqrt2(const Numerator& x) {
  return is_odd(x[0]) == is_odd(x[2]) && is_odd(x[1]) == is_odd(x[3]);
}

inline Numerator div_sqrt2(const Numerator& x) {
  return {(x[1] - x[3]) / 2, (x[0] + x[2]) / 2, (x[1] + x[3]) / 2, (x[2] - x[0]) / 2};
}

inline void scale_by_sqrt2_power(Numerator& x, unsigned m) {
  if (m >= 2) {
    const unsigned shift = m / 2;
    for (auto& v : x) v <<= shift;
  }
  if (m % 2 == 1) x = times_sqrt2(x);
}

// Convolution in Z[w] with w^4 = -1.
inline Numerator multiply(const Numerator& a, const Numerator& b) {
  return {a[0] * b[0] - a[1] * b[3] - a[2] * b[2] - a[3] * b[1],
          a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] + a[1] * b[1] + a[2] * b[0] - a[3] * b[3],
          a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]};
}

}  // namespace ring_detail

class RingScalar {
 public:
  using Numerator = ring_detail::Numerator;

  RingScalar() = default;

  RingScalar(BigInt a, BigInt b, BigInt c, BigInt d, unsigned k = 0)
      : num_{std::move(a), std::move(b), std::move(c), std::move(d)}, k_(k) {
    normalize();
  }

  static RingScalar from_numerator(Numerator num, unsigned k) {
    RingScalar r;
    r.num_ = std::move(num);
    r.k_ = k;
    r.normalize();
    return r;
  }

  static RingScalar from_int(long long v) { return RingScalar(BigInt(v), 0, 0, 0, 0); }

  static RingScalar zero() { return {}; }
  static RingScalar one() { return from_int(1); }
  static RingScalar i() { return RingScalar(0, 0, 1, 0, 0); }
  static RingScalar omega() { return RingScalar(0, 1, 0, 0, 0); }
  static RingScalar inv_sqrt2() { return RingScalar(1, 0, 0, 0, 1); }
  static RingScalar half() { return RingScalar(1, 0, 0, 0, 2); }
  static RingScalar sqrt2() { return RingScalar(0, 1, 0, -1, 0); }

  const BigInt& coeff(int j) const { return num_[static_cast<std::size_t>(j)]; }
  const Numerator& numerator() const noexcept { return num_; }
  unsigned sqrt2_exponent() const noexcept { return k_; }

  bool is_zero() const { return k_ == 0 && ring_detail::all_zero(num_); }

  RingScalar operator-() const {
    RingScalar r = *this;
    for (auto& v : r.num_) v = -v;
    return r;
  }

  friend RingScalar operator+(const RingScalar& x, const RingScalar& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    Numerator a = x.num_;
    Numerator b = y.num_;
    const unsigned k = std::max(x.k_, y.k_);
    ring_detail::scale_by_sqrt2_power(a, k - x.k_);
    ring_detail::scale_by_sqrt2_power(b, k - y.k_);
    for (std::size_t j = 0; j < 4; ++j) a[j] += b[j];
    return from_numerator(std::move(a), k);
  }

  friend RingScalar operator-(const RingScalar& x, const RingScalar& y) { return x + (-y); }

  friend RingScalar operator*(const RingScalar& x, const RingScalar& y) {
    if (x.is_zero() || y.is_zero()) return {};
    return from_numerator(ring_detail::multiply(x.num_, y.num_), x.k_ + y.k_);
  }

  RingScalar& operator+=(const RingScalar& y) { return *this = *this + y; }
  RingScalar& operator-=(const RingScalar& y) { return *this = *this - y; }
  RingScalar& operator*=(const RingScalar& y) { return *this = *this * y; }

  friend bool operator==(const RingScalar& x, const RingScalar& y) {
    return x.k_ == y.k_ && x.num_ == y.num_;
  }
  friend bool operator!=(const RingScalar& x, const RingScalar& y) { return !(x == y); }

  /// Complex conjugation: w -> w^7 = -w^3.
  RingScalar conj() const {
    RingScalar r;
    r.num_ = {num_[0], -num_[3], -num_[2], -num_[1]};
    r.k_ = k_;
    return r;
  }

  /// Multiplication by w^p. Units never change the canonical denominator.
  RingScalar times_omega_power(int p) const {
    p = ((p % 8) + 8) % 8;
    RingScalar r = *this;
    for (int s = 0; s < p; ++s) {
      r.num_ = {-r.num_[3], r.num_[0], r.num_[1], r.num_[2]};
    }
    return r;
  }

  RingScalar times_i_power(int c) const { return times_omega_power(2 * c); }

  /// Division by sqrt2^m.
  RingScalar scaled_inv_sqrt2(unsigned m) const {
    if (is_zero()) return {};
    return from_numerator(num_, k_ + m);
  }

  RingScalar abs2() const { return *this * conj(); }
  bool is_real() const { return *this == conj(); }
  bool is_unit_modulus() const { return abs2() == one(); }

  std::string to_string() const {
    return "(" + num_[0].str() + " + " + num_[1].str() + "·w + " + num_[2].str() + "·w^2 + " +
           num_[3].str() + "·w^3)/sqrt2^" + std::to_string(k_);
  }

  /// Compact form used for hashing and exact dictionary keys.
  void append_key(std::string& out) const {
    for (const auto& v : num_) {
      out += v.str();
      out += ',';
    }
    out += std::to_string(k_);
    out += ';';
  }

  friend std::ostream& operator<<(std::ostream& os, const RingScalar& x) {
    return os << x.to_string();
  }

 private:
  // Canonical: k == 0, or the numerator is not divisible by sqrt2.
  void normalize() {
    using namespace ring_detail;
    if (all_zero(num_)) {
      k_ = 0;
      return;
    }
    while (k_ > 0) {
      if (k_ >= 2 && all_even(num_)) {
        for (auto& v : num_) v /= 2;
        k_ -= 2;
      } else if (divisible_by_sqrt2(num_)) {
        num_ = div_sqrt2(num_);
        k_ -= 1;
      } else {
        break;
      }
    }
  }

  Numerator num_{};
  unsigned k_ = 0;
};

/// Sums of products with a single normalization at the end.
class RingAccumulator {
 public:
  void add_product(const RingScalar& x, const RingScalar& y) {
    if (x.is_zero() || y.is_zero()) return;
    add_raw(ring_detail::multiply(x.numerator(), y.numerator()),
            x.sqrt2_exponent() + y.sqrt2_exponent());
  }

  void add(const RingScalar& x) {
    if (x.is_zero()) return;
    add_raw(x.numerator(), x.sqrt2_exponent());
  }

  RingScalar result() const {
    if (empty_) return {};
    return RingScalar::from_numerator(acc_, k_);
  }

 private:
  void add_raw(ring_detail::Numerator term, unsigned k) {
    if (empty_) {
      acc_ = std::move(term);
      k_ = k;
      empty_ = false;
      return;
    }
    if (k > k_) {
      ring_detail::scale_by_sqrt2_power(acc_, k - k_);
      k_ = k;
    } else if (k < k_) {
      ring_detail::scale_by_sqrt2_power(term, k_ - k);
    }
    for (std::size_t j = 0; j < 4; ++j) acc_[j] += term[j];
  }

  ring_detail::Numerator acc_{};
  unsigned k_ = 0;
  bool empty_ = true;
};

enum class RingOp { add, sub, mul, neg, conj };
enum class RingConst { zero, one, i, inv_sqrt2, omega, half };

/// Unary operations ignore `y`.
inline RingScalar ring_arith(RingOp op, const RingScalar& x, const RingScalar& y = {}) {
  switch (op) {
    case RingOp::add: return x + y;
    case RingOp::sub: return x - y;
    case RingOp::mul: return x * y;
    case RingOp::neg: return -x;
    case RingOp::conj: return x.conj();
  }
  return {};
}

inline RingScalar ring_const(RingConst tag) {
  switch (tag) {
    case RingConst::zero: return RingScalar::zero();
    case RingConst::one: return RingScalar::one();
    case RingConst::i: return RingScalar::i();
    case RingConst::inv_sqrt2: return RingScalar::inv_sqrt2();
    case RingConst::omega: return RingScalar::omega();
    case RingConst::half: return RingScalar::half();
  }
  return {};
}

}  // namespace climb
