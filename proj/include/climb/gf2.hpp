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

// Dense bit-packed vectors and matrices over GF(2).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "climb/error.hpp"

namespace climb {

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVec unit(std::size_t size, std::size_t index) {
    BitVec v(size);
    v.set(index, true);
    return v;
  }

  /// Parses "0110..." (position 0 first).
  static BitVec from_string(const std::string& bits) {
    BitVec v(bits.size());
    for (std::size_t j = 0; j < bits.size(); ++j) {
      if (bits[j] == '1') {
        v.set(j, true);
      } else if (bits[j] != '0') {
        throw Error(ErrorCode::ParseSyntax, "bitstring may only contain 0 and 1: " + bits);
      }
    }
    return v;
  }

  std::size_t size() const noexcept { return size_; }

  bool get(std::size_t j) const { return (words_[j / 64] >> (j % 64)) & 1U; }
  void set(std::size_t j, bool bit) {
    const std::uint64_t mask = std::uint64_t{1} << (j % 64);
    if (bit) {
      words_[j / 64] |= mask;
    } else {
      words_[j / 64] &= ~mask;
    }
  }
  void flip(std::size_t j) { words_[j / 64] ^= std::uint64_t{1} << (j % 64); }

  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  std::size_t popcount() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  /// Standard dot product mod 2.
  bool dot(const BitVec& other) const {
    check_size(other);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) % 2 == 1;
  }

  BitVec& operator^=(const BitVec& other) {
    check_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator+(BitVec a, const BitVec& b) { return a ^= b; }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }
  friend bool operator<(const BitVec& a, const BitVec& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.words_ < b.words_;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t j = 0; j < size_; ++j) {
      if (get(j)) s[j] = '1';
    }
    return s;
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_) h = h * 1000003U ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

  BitVec slice(std::size_t begin, std::size_t count) const {
    BitVec out(count);
    for (std::size_t j = 0; j < count; ++j) out.set(j, get(begin + j));
    return out;
  }

  static BitVec concat(const BitVec& a, const BitVec& b) {
    BitVec out(a.size() + b.size());
    for (std::size_t j = 0; j < a.size(); ++j) out.set(j, a.get(j));
    for (std::size_t j = 0; j < b.size(); ++j) out.set(a.size() + j, b.get(j));
    return out;
  }

 private:
  void check_size(const BitVec& other) const {
    if (other.size_ != size_) {
      throw Error(ErrorCode::Dimension, "bit vector length mismatch: " + std::to_string(size_) +
                                            " vs " + std::to_string(other.size_));
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BinMatrix identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set(j, j, true);
    return m;
  }

  static BinMatrix from_rows(std::vector<BitVec> rows, std::size_t cols) {
    BinMatrix m;
    m.cols_ = cols;
    for (const auto& r : rows) {
      if (r.size() != cols) throw Error(ErrorCode::Dimension, "row length mismatch");
    }
    m.rows_ = std::move(rows);
    return m;
  }

  /// Rows given as bitstrings, e.g. {"0001", "0010", ...}.
  static BinMatrix from_strings(const std::vector<std::string>& rows) {
    std::vector<BitVec> bits;
    bits.reserve(rows.size());
    for (const auto& s : rows) bits.push_back(BitVec::from_string(s));
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    return from_rows(std::move(bits), cols);
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool bit) { rows_[r].set(c, bit); }
  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& row(std::size_t r) { return rows_[r]; }
  const std::vector<BitVec>& row_vectors() const noexcept { return rows_; }

  BitVec column(std::size_t c) const {
    BitVec v(rows());
    for (std::size_t r = 0; r < rows(); ++r) v.set(r, get(r, c));
    return v;
  }

  BinMatrix transpose() const {
    BinMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (get(r, c)) t.set(c, r, true);
      }
    }
    return t;
  }

  /// Row vector times matrix.
  BitVec left_apply(const BitVec& v) const {
    if (v.size() != rows()) throw Error(ErrorCode::Dimension, "vector/matrix size mismatch");
    BitVec out(cols_);
    for (std::size_t r = 0; r < rows(); ++r) {
      if (v.get(r)) out ^= rows_[r];
    }
    return out;
  }

  friend BinMatrix operator*(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols_ != b.rows()) throw Error(ErrorCode::Dimension, "matrix product shape mismatch");
    BinMatrix out(a.rows(), b.cols_);
    for (std::size_t r = 0; r < a.rows(); ++r) out.rows_[r] = b.left_apply(a.rows_[r]);
    return out;
  }

  friend BinMatrix operator+(const BinMatrix& a, const BinMatrix& b) {
    if (a.rows() != b.rows() || a.cols_ != b.cols_) {
      throw Error(ErrorCode::Dimension, "matrix sum shape mismatch");
    }
    BinMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) out.rows_[r] ^= b.rows_[r];
    return out;
  }

  friend bool operator==(const BinMatrix& a, const BinMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const BinMatrix& a, const BinMatrix& b) { return !(a == b); }
  friend bool operator<(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.rows_ < b.rows_;
  }

  bool is_square() const { return rows() == cols_; }
  bool is_zero() const {
    for (const auto& r : rows_) {
      if (r.any()) return false;
    }
    return true;
  }
  bool is_symmetric() const { return is_square() && *this == transpose(); }
  bool has_zero_diagonal() const {
    for (std::size_t j = 0; j < std::min(rows(), cols_); ++j) {
      if (get(j, j)) return false;
    }
    return true;
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows());
    for (const auto& r : rows_) out.push_back(r.to_string());
    return out;
  }

  std::size_t hash() const {
    std::size_t h = cols_;
    for (const auto& r : rows_) h = h * 31U ^ r.hash();
    return h;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

struct BinMatrixHash {
  std::size_t operator()(const BinMatrix& m) const { return m.hash(); }
};

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  std::vector<BitVec> basis;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return basis.size(); }
};

inline RowEchelon row_echelon(const BinMatrix& m) {
  std::vector<BitVec> rows = m.row_vectors();
  RowEchelon out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
    std::size_t pivot = next;
    while (pivot < rows.size() && !rows[pivot].get(c)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[next], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
    }
    out.pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  out.basis = std::move(rows);
  return out;
}

/// Basis (reduced row echelon) of the row space and its dimension.
inline std::pair<std::vector<BitVec>, std::size_t> gf2_rowspace(const BinMatrix& m) {
  RowEchelon e = row_echelon(m);
  const std::size_t rank = e.rank();
  return {std::move(e.basis), rank};
}

inline std::size_t gf2_rank(const BinMatrix& m) { return row_echelon(m).rank(); }

inline std::size_t gf2_rank(const std::vector<BitVec>& vectors, std::size_t cols) {
  return gf2_rank(BinMatrix::from_rows(vectors, cols));
}

inline BinMatrix gf2_inverse(const BinMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::Dimension, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<BitVec> left = m.row_vectors();
  std::vector<BitVec> right = BinMatrix::identity(n).row_vectors();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && !left[pivot].get(c)) ++pivot;
    if (pivot == n) throw Error(ErrorCode::NotInvertible, "matrix is singular over GF(2)");
    std::swap(left[c], left[pivot]);
    std::swap(right[c], right[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && left[r].get(c)) {
        left[r] ^= left[c];
        right[r] ^= right[c];
      }
    }
  }
  return BinMatrix::from_rows(std::move(right), n);
}

/// Basis of { x : x * m = 0 } (left kernel).
inline std::vector<BitVec> gf2_left_kernel(const BinMatrix& m) {
  // x * m = 0  <=>  m^T * x^T = 0; eliminate on m^T rows tracking combinations.
  const std::size_t n = m.rows();
  std::vector<BitVec> rows = m.row_vectors();
  std::vector<BitVec> combo = BinMatrix::identity(n).row_vectors();
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < n; ++c) {
    std::size_t pivot = next;
    while (pivot < n && !rows[pivot].get(c)) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[next], rows[pivot]);
    std::swap(combo[next], combo[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != next && rows[r].get(c)) {
        rows[r] ^= rows[next];
        combo[r] ^= combo[next];
      }
    }
    ++next;
  }
  return {combo.begin() + static_cast<std::ptrdiff_t>(next), combo.end()};
}

/// Some x with x * m = target, if one exists.
inline std::optional<BitVec> gf2_solve_left(const BinMatrix& m, const BitVec& target) {
  if (target.size() != m.cols()) throw Error(ErrorCode::Dimension, "target length mismatch");
  const std::size_t n = m.rows();
  std::vector<BitVec> rows = m.row_vectors();
  std::vector<BitVec> combo = BinMatrix::identity(n).row_vectors();
  BitVec residual = target;
  BitVec x(n);
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < n; ++c) {
    std::size_t pivot = next;
    while (pivot < n && !rows[pivot].get(c)) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[next], rows[pivot]);
    std::swap(combo[next], combo[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != next && rows[r].get(c)) {
        rows[r] ^= rows[next];
        combo[r] ^= combo[next];
      }
    }
    if (residual.get(c)) {
      residual ^= rows[next];
      x ^= combo[next];
    }
    ++next;
  }
  if (residual.any()) return std::nullopt;
  return x;
}

}  // namespace climb
