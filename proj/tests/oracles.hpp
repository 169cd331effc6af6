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

// Reference implementations used only by the tests. Each one is written
// from the definitions and shares no code path with the routine under test.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "climb/climb.hpp"

namespace oracle {

using climb::BinMatrix;
using climb::BitVec;
using climb::Matrix;
using climb::PauliOp;
using climb::RingScalar;

using Complex = std::complex<double>;

/// Floating-point shadow of an exact scalar.
inline Complex to_complex(const RingScalar& x) {
  const Complex w = std::polar(1.0, M_PI / 4);
  Complex acc = 0;
  Complex p = 1;
  for (int j = 0; j < 4; ++j) {
    acc += x.coeff(j).convert_to<double>() * p;
    p *= w;
  }
  return acc / std::pow(std::sqrt(2.0), static_cast<double>(x.sqrt2_exponent()));
}

inline bool near(const Complex& a, const Complex& b) { return std::abs(a - b) < 1e-9; }

/// Textbook triple loop with plain ring operations.
inline Matrix naive_mul(const Matrix& a, const Matrix& b) {
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      RingScalar s;
      for (std::size_t k = 0; k < a.dim(); ++k) s = s + a(i, k) * b(k, j);
      out(i, j) = s;
    }
  }
  return out;
}

inline Matrix naive_adjoint(const Matrix& a) {
  Matrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out(j, i) = a(i, j).conj();
  }
  return out;
}

inline RingScalar naive_trace(const Matrix& a) {
  RingScalar s;
  for (std::size_t j = 0; j < a.dim(); ++j) s = s + a(j, j);
  return s;
}

inline Matrix naive_kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t l = 0; l < b.dim(); ++l) out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
  return out;
}

inline Matrix ints(std::size_t dim, const std::vector<long long>& v) { return Matrix::from_ints(dim, v); }

/// i^c X(x) Z(z) as a Kronecker product of 2x2 factors, qubit 1 leftmost.
inline Matrix pauli_matrix(const PauliOp& p) {
  Matrix m = ints(1, {1});
  for (int q = 1; q <= p.n; ++q) {
    Matrix f = ints(2, {1, 0, 0, 1});
    if (p.z_at(q)) f = naive_mul(f, ints(2, {1, 0, 0, -1}));
    if (p.x_at(q)) f = naive_mul(ints(2, {0, 1, 1, 0}), f);
    m = naive_kron(m, f);
  }
  return m.scaled(RingScalar::one().times_i_power(p.c));
}

/// x^T x style bit pattern: matrix from rows given as strings.
inline BinMatrix bits(const std::vector<std::string>& rows) { return BinMatrix::from_strings(rows); }

/// <vF, v> = 0 for all v, by enumeration.
inline bool hyperbolic_by_quantifier(const climb::SymplecticMatrix& f) {
  const std::size_t dim = 2 * f.n();
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << dim); ++t) {
    BitVec v(dim);
    for (std::size_t j = 0; j < dim; ++j) v.set(j, (t >> j) & 1U);
    const BitVec w = f.matrix().left_apply(v);
    bool inner = false;
    const std::size_t n = dim / 2;
    for (std::size_t j = 0; j < n; ++j) inner ^= (w.get(j) && v.get(n + j)) != (w.get(n + j) && v.get(j));
    if (inner) return false;
  }
  return true;
}

/// Block construction diag(I, ..., I, U) for one control.
inline Matrix block_controlled(const Matrix& u) {
  Matrix out = Matrix::identity(2 * u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < u.dim(); ++j) out(u.dim() + i, u.dim() + j) = u(i, j);
  return out;
}

inline RingScalar random_scalar(std::mt19937_64& rng, int span = 5, unsigned max_k = 4) {
  std::uniform_int_distribution<int> coeff(-span, span);
  std::uniform_int_distribution<unsigned> k(0, max_k);
  return RingScalar(coeff(rng), coeff(rng), coeff(rng), coeff(rng), k(rng));
}

inline PauliOp random_pauli(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<int> phase(0, 3);
  return PauliOp::make(n, mask(rng), mask(rng), phase(rng));
}

}  // namespace oracle
