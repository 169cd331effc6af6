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

#include <bit>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "climb/error.hpp"
#include "climb/pauli.hpp"
#include "climb/ring.hpp"

namespace climb {

/// Dense square matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t j = 0; j < dim; ++j) m(j, j) = RingScalar::one();
    return m;
  }

  /// Row-major entries given as small integers; convenient for literals.
  static Matrix from_ints(std::size_t dim, const std::vector<long long>& entries) {
    if (entries.size() != dim * dim) throw Error(ErrorCode::Dimension, "entry count mismatch");
    Matrix m(dim);
    for (std::size_t j = 0; j < entries.size(); ++j) m.data_[j] = RingScalar::from_int(entries[j]);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  const RingScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  RingScalar& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }

  Matrix adjoint() const {
    Matrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c).conj();
    }
    return out;
  }

  Matrix scaled(const RingScalar& s) const {
    Matrix out(dim_);
    for (std::size_t j = 0; j < data_.size(); ++j) out.data_[j] = data_[j] * s;
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_dim(b);
    Matrix out(a.dim_);
    for (std::size_t j = 0; j < a.data_.size(); ++j) out.data_[j] = a.data_[j] + b.data_[j];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_dim(b);
    Matrix out(a.dim_);
    for (std::size_t j = 0; j < a.data_.size(); ++j) out.data_[j] = a.data_[j] - b.data_[j];
    return out;
  }

  Matrix operator-() const { return scaled(RingScalar::from_int(-1)); }

  // Skips zero entries on both sides; gate matrices are mostly sparse.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_dim(b);
    const std::size_t n = a.dim_;
    Matrix out(n);
    std::vector<std::vector<std::size_t>> b_support(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) b_support[k].push_back(j);
      }
    }
    std::vector<RingAccumulator> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(row.begin(), row.end(), RingAccumulator{});
      for (std::size_t k = 0; k < n; ++k) {
        const RingScalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j : b_support[k]) row[j].add_product(aik, b(k, j));
      }
      for (std::size_t j = 0; j < n; ++j) out(i, j) = row[j].result();
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_hermitian() const {
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = r; c < dim_; ++c) {
        if ((*this)(r, c) != (*this)(c, r).conj()) return false;
      }
    }
    return true;
  }

  bool is_identity() const { return *this == identity(dim_); }

  RingScalar trace() const {
    RingAccumulator acc;
    for (std::size_t j = 0; j < dim_; ++j) acc.add((*this)(j, j));
    return acc.result();
  }

  std::size_t nonzeros() const {
    std::size_t count = 0;
    for (const auto& v : data_) count += v.is_zero() ? 0 : 1;
    return count;
  }

  /// Exact key that is identical for U and zeta*U whenever |zeta| = 1:
  /// the matrix is multiplied by the conjugate of its first nonzero entry.
  std::string phase_canonical_key() const {
    std::string key = std::to_string(dim_) + ":";
    const RingScalar* first = nullptr;
    for (const auto& v : data_) {
      if (!v.is_zero()) {
        first = &v;
        break;
      }
    }
    if (first == nullptr) return key;
    const RingScalar rotate = first->conj();
    for (const auto& v : data_) (v * rotate).append_key(key);
    return key;
  }

 private:
  void check_dim(const Matrix& b) const {
    if (dim_ != b.dim_) {
      throw Error(ErrorCode::Dimension,
                  "matrix dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(b.dim_));
    }
  }

  std::size_t dim_ = 0;
  std::vector<RingScalar> data_;
};

inline int qubits_for_dim(std::size_t dim) {
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw Error(ErrorCode::Dimension, "matrix dimension " + std::to_string(dim) + " is not a power of two");
  }
  return std::countr_zero(dim);
}

/// A 2^n x 2^n matrix known to satisfy U U^dagger = I exactly.
class ExactUnitary {
 public:
  ExactUnitary() : ExactUnitary(identity(0)) {}

  /// Verifies unitarity.
  static ExactUnitary from_matrix(Matrix m) {
    const int n = qubits_for_dim(m.dim());
    if (!(m * m.adjoint()).is_identity()) throw Error(ErrorCode::NotUnitary, "U U^dagger != I");
    return ExactUnitary(n, std::move(m));
  }

  /// For matrices that are unitary by construction (products, conjugates, ...).
  static ExactUnitary trusted(Matrix m) {
    const int n = qubits_for_dim(m.dim());
    return ExactUnitary(n, std::move(m));
  }

  static ExactUnitary identity(int n) { return ExactUnitary(n, Matrix::identity(std::size_t{1} << n)); }

  int qubits() const noexcept { return n_; }
  std::size_t dim() const noexcept { return m_.dim(); }
  const Matrix& matrix() const noexcept { return m_; }
  const RingScalar& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  ExactUnitary adjoint() const { return ExactUnitary(n_, m_.adjoint()); }
  bool is_hermitian() const { return m_.is_hermitian(); }

  /// Global phase; `phase` must have modulus one.
  ExactUnitary with_phase(const RingScalar& phase) const {
    if (!phase.is_unit_modulus()) throw Error(ErrorCode::NotUnitary, "phase is not a unit");
    return ExactUnitary(n_, m_.scaled(phase));
  }

  friend ExactUnitary operator*(const ExactUnitary& a, const ExactUnitary& b) {
    if (a.n_ != b.n_) throw Error(ErrorCode::Dimension, "unitary qubit counts differ");
    return ExactUnitary(a.n_, a.m_ * b.m_);
  }

  friend bool operator==(const ExactUnitary& a, const ExactUnitary& b) { return a.m_ == b.m_; }
  friend bool operator!=(const ExactUnitary& a, const ExactUnitary& b) { return !(a == b); }

 private:
  ExactUnitary(int n, Matrix m) : n_(n), m_(std::move(m)) {}

  int n_ = 0;
  Matrix m_;
};

// ---------------------------------------------------------------------------
// Pauli matrices and monomial shortcuts.

namespace pauli_detail {

// Entry of i^c X(x) Z(z) at (j ^ x, j), as a power of i.
inline int column_phase(const PauliOp& p, std::size_t j) {
  return p.c + 2 * (std::popcount(p.z & j) % 2);
}

}  // namespace pauli_detail

inline ExactUnitary pauli_to_matrix(const PauliOp& p) {
  const std::size_t dim = std::size_t{1} << p.n;
  Matrix m(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    m(j ^ p.x, j) = RingScalar::one().times_i_power(pauli_detail::column_phase(p, j));
  }
  return ExactUnitary::trusted(std::move(m));
}

/// U * P in O(N^2).
inline Matrix right_mul_pauli(const Matrix& u, const PauliOp& p) {
  const std::size_t dim = u.dim();
  Matrix out(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const std::size_t src = j ^ p.x;
    const int phase = pauli_detail::column_phase(p, j);
    for (std::size_t i = 0; i < dim; ++i) out(i, j) = u(i, src).times_i_power(phase);
  }
  return out;
}

/// P * U in O(N^2).
inline Matrix left_mul_pauli(const PauliOp& p, const Matrix& u) {
  const std::size_t dim = u.dim();
  Matrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t src = i ^ p.x;
    const int phase = pauli_detail::column_phase(p, src);
    for (std::size_t j = 0; j < dim; ++j) out(i, j) = u(src, j).times_i_power(phase);
  }
  return out;
}

/// M = phase * pauli, with `pauli` the Hermitian representative of its class.
struct PhasedPauli {
  PauliOp pauli;
  RingScalar phase;
};

namespace pauli_detail {

// Recovers (x, z, zeta) with M = zeta * X(x) Z(z) from column 0 and the unit
// columns; `column(j)` returns column j of M. Does not verify the remaining
// entries.
template <typename ColumnFn>
std::optional<std::pair<PauliOp, RingScalar>> guess_pauli(int n, ColumnFn&& column) {
  const std::size_t dim = std::size_t{1} << n;
  const std::vector<RingScalar> col0 = column(std::size_t{0});
  std::optional<std::size_t> row;
  for (std::size_t i = 0; i < dim; ++i) {
    if (col0[i].is_zero()) continue;
    if (row) return std::nullopt;
    row = i;
  }
  if (!row) return std::nullopt;
  const std::uint64_t x = *row;
  const RingScalar zeta = col0[x];
  std::uint64_t z = 0;
  for (int b = 0; b < n; ++b) {
    const std::size_t e = std::size_t{1} << b;
    const std::vector<RingScalar> col = column(e);
    const RingScalar& v = col[x ^ e];
    if (v == zeta) continue;
    if (v == -zeta) {
      z |= e;
      continue;
    }
    return std::nullopt;
  }
  return std::make_pair(PauliOp::make(n, x, z, 0), zeta);
}

inline PhasedPauli to_hermitian_form(const PauliOp& raw, const RingScalar& zeta) {
  // X(x)Z(z) = i^{-h} E(x,z) with h = popcount(x&z) mod 2.
  const PauliOp e = hermitian_rep(raw.n, raw.x, raw.z);
  return {e, zeta.times_i_power(-e.c)};
}

}  // namespace pauli_detail

/// M == zeta * Pauli for some scalar zeta (any modulus).
inline std::optional<PhasedPauli> detect_pauli_up_to_phase(const Matrix& m) {
  const int n = qubits_for_dim(m.dim());
  auto column = [&m](std::size_t j) {
    std::vector<RingScalar> col(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) col[i] = m(i, j);
    return col;
  };
  auto guess = pauli_detail::guess_pauli(n, column);
  if (!guess) return std::nullopt;
  const auto& [raw, zeta] = *guess;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const std::size_t target = j ^ raw.x;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (i == target) {
        if (m(i, j) != zeta.times_i_power(pauli_detail::column_phase(raw, j))) return std::nullopt;
      } else if (!m(i, j).is_zero()) {
        return std::nullopt;
      }
    }
  }
  return pauli_detail::to_hermitian_form(raw, zeta);
}

/// M == phase * E with phase in {1, i, -1, -i} and E a Hermitian Pauli.
inline std::optional<PhasedPauli> detect_pauli(const Matrix& m) {
  auto found = detect_pauli_up_to_phase(m);
  if (!found) return std::nullopt;
  for (int c = 0; c < 4; ++c) {
    if (found->phase == RingScalar::one().times_i_power(c)) return found;
  }
  return std::nullopt;
}

inline std::optional<PhasedPauli> detect_pauli(const ExactUnitary& u) { return detect_pauli(u.matrix()); }

/// Whether U P U^dagger is a scalar times a Pauli, without forming the
/// product: a few columns pin down the candidate, then U P == Q U is checked.
inline std::optional<PhasedPauli> conjugated_pauli(const Matrix& u, const PauliOp& p) {
  const int n = qubits_for_dim(u.dim());
  const std::size_t dim = u.dim();
  auto column = [&](std::size_t j) {
    // Column j of U P U^dagger = U P conj(row j of U).
    std::vector<RingScalar> w(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t src = i ^ p.x;
      const RingScalar& v = u(j, src);
      if (!v.is_zero()) w[i] = v.conj().times_i_power(pauli_detail::column_phase(p, src));
    }
    std::vector<RingScalar> out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      RingAccumulator acc;
      for (std::size_t k = 0; k < dim; ++k) {
        if (!w[k].is_zero()) acc.add_product(u(r, k), w[k]);
      }
      out[r] = acc.result();
    }
    return out;
  };
  auto guess = pauli_detail::guess_pauli(n, column);
  if (!guess) return std::nullopt;
  const auto& [raw, zeta] = *guess;
  const Matrix up = right_mul_pauli(u, p);
  const Matrix qu = left_mul_pauli(raw, u);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const RingScalar& lhs = up(i, j);
      const RingScalar& rhs = qu(i, j);
      if (lhs.is_zero() != rhs.is_zero()) return std::nullopt;
      if (!lhs.is_zero() && lhs != rhs * zeta) return std::nullopt;
    }
  }
  return pauli_detail::to_hermitian_form(raw, zeta);
}

/// U P U^dagger as a dense matrix.
inline Matrix conjugate(const Matrix& u, const PauliOp& p) { return right_mul_pauli(u, p) * u.adjoint(); }

inline Matrix conjugate(const Matrix& u, const Matrix& m) { return u * m * u.adjoint(); }

// ---------------------------------------------------------------------------
// Tensor products, controls and embeddings.

inline ExactUnitary kron(const ExactUnitary& a, const ExactUnitary& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  Matrix m(da * db);
  for (std::size_t ar = 0; ar < da; ++ar) {
    for (std::size_t ac = 0; ac < da; ++ac) {
      const RingScalar& av = a(ar, ac);
      if (av.is_zero()) continue;
      for (std::size_t br = 0; br < db; ++br) {
        for (std::size_t bc = 0; bc < db; ++bc) m(ar * db + br, ac * db + bc) = av * b(br, bc);
      }
    }
  }
  return ExactUnitary::trusted(std::move(m));
}

/// C^(i)(U): the first i qubits control U on the remaining qubits.
inline ExactUnitary controlled(const ExactUnitary& u, int controls) {
  if (controls < 0) throw Error(ErrorCode::Dimension, "negative control count");
  const std::size_t inner = u.dim();
  const std::size_t dim = inner << controls;
  Matrix m = Matrix::identity(dim);
  const std::size_t offset = dim - inner;
  for (std::size_t r = 0; r < inner; ++r) {
    for (std::size_t c = 0; c < inner; ++c) m(offset + r, offset + c) = u(r, c);
  }
  return ExactUnitary::trusted(std::move(m));
}

/// Gate on k qubits placed on `qubits` (1-based, gate's first qubit first) of n.
inline ExactUnitary embed(const ExactUnitary& gate, const std::vector<int>& qubits, int n) {
  const int k = gate.qubits();
  if (static_cast<int>(qubits.size()) != k) throw Error(ErrorCode::Dimension, "embedding arity mismatch");
  std::uint64_t mask = 0;
  for (int q : qubits) {
    if (q < 1 || q > n) throw Error(ErrorCode::Dimension, "qubit index out of range");
    const std::uint64_t bit = PauliOp::qubit_bit(n, q);
    if ((mask & bit) != 0) throw Error(ErrorCode::Dimension, "repeated qubit in embedding");
    mask |= bit;
  }
  const std::size_t dim = std::size_t{1} << n;
  auto sub_index = [&](std::size_t full) {
    std::size_t s = 0;
    for (int t = 0; t < k; ++t) {
      s = (s << 1) | ((full >> (n - qubits[static_cast<std::size_t>(t)])) & 1U);
    }
    return s;
  };
  auto with_sub = [&](std::size_t base, std::size_t s) {
    std::size_t full = base & ~mask;
    for (int t = 0; t < k; ++t) {
      if ((s >> (k - 1 - t)) & 1U) full |= PauliOp::qubit_bit(n, qubits[static_cast<std::size_t>(t)]);
    }
    return full;
  };
  Matrix m(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t sc = sub_index(col);
    for (std::size_t sr = 0; sr < gate.dim(); ++sr) {
      const RingScalar& v = gate(sr, sc);
      if (!v.is_zero()) m(with_sub(col, sr), col) = v;
    }
  }
  return ExactUnitary::trusted(std::move(m));
}

namespace gates {

inline ExactUnitary I(int n = 1) { return ExactUnitary::identity(n); }
inline ExactUnitary X() { return pauli_to_matrix(PauliOp::make(1, 1, 0, 0)); }
inline ExactUnitary Z() { return pauli_to_matrix(PauliOp::make(1, 0, 1, 0)); }
inline ExactUnitary Y() { return pauli_to_matrix(PauliOp::make(1, 1, 1, 1)); }

inline ExactUnitary H() {
  Matrix m = Matrix::from_ints(2, {1, 1, 1, -1}).scaled(RingScalar::inv_sqrt2());
  return ExactUnitary::trusted(std::move(m));
}

inline ExactUnitary S() {
  Matrix m(2);
  m(0, 0) = RingScalar::one();
  m(1, 1) = RingScalar::i();
  return ExactUnitary::trusted(std::move(m));
}

inline ExactUnitary Sdg() { return S().adjoint(); }

/// R = H S^dagger H = (1/2) [[1-i, 1+i], [1+i, 1-i]].
inline ExactUnitary R() { return H() * Sdg() * H(); }

inline ExactUnitary CX() { return controlled(X(), 1); }
inline ExactUnitary CZ() { return controlled(Z(), 1); }

inline ExactUnitary SWAP() {
  Matrix m = Matrix::from_ints(4, {1, 0, 0, 0,  //
                                   0, 0, 1, 0,  //
                                   0, 1, 0, 0,  //
                                   0, 0, 0, 1});
  return ExactUnitary::trusted(std::move(m));
}

inline ExactUnitary CCX() { return controlled(X(), 2); }
inline ExactUnitary CCZ() { return controlled(Z(), 2); }
inline ExactUnitary CSWAP() { return controlled(SWAP(), 1); }
inline ExactUnitary CCCX() { return controlled(X(), 3); }

/// SWAP of qubits a and b inside n qubits.
inline ExactUnitary swap_qubits(int n, int a, int b) {
  if (a == b) return ExactUnitary::identity(n);
  return embed(SWAP(), {a, b}, n);
}

}  // namespace gates

}  // namespace climb
