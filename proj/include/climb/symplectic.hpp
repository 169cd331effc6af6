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

#include <algorithm>
#include <cstddef>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "climb/error.hpp"
#include "climb/gf2.hpp"
#include "climb/pauli.hpp"

namespace climb {

/// Omega_n = [[0, I], [I, 0]].
inline BinMatrix omega(std::size_t n) {
  BinMatrix m(2 * n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    m.set(j, n + j, true);
    m.set(n + j, j, true);
  }
  return m;
}

/// [[a, b], [c, d]] from four n x n blocks.
inline BinMatrix block_matrix(const BinMatrix& a, const BinMatrix& b, const BinMatrix& c, const BinMatrix& d) {
  const std::size_t n = a.rows();
  for (const BinMatrix* blk : {&a, &b, &c, &d}) {
    if (blk->rows() != n || blk->cols() != n) throw Error(ErrorCode::Dimension, "block size mismatch");
  }
  BinMatrix m(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < n; ++col) {
      m.set(r, col, a.get(r, col));
      m.set(r, n + col, b.get(r, col));
      m.set(n + r, col, c.get(r, col));
      m.set(n + r, n + col, d.get(r, col));
    }
  }
  return m;
}

inline bool is_symplectic(const BinMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0) return false;
  const BinMatrix om = omega(m.rows() / 2);
  return m * om * m.transpose() == om;
}

class SymplecticMatrix {
 public:
  SymplecticMatrix() = default;

  /// Validates F Omega F^T = Omega.
  explicit SymplecticMatrix(BinMatrix m) : m_(std::move(m)) {
    if (!is_symplectic(m_)) throw Error(ErrorCode::NotSymplectic, "F Omega F^T != Omega");
  }

  static SymplecticMatrix identity(std::size_t n) { return trusted(BinMatrix::identity(2 * n)); }

  /// Skips validation; for products of symplectic matrices.
  static SymplecticMatrix trusted(BinMatrix m) {
    SymplecticMatrix s;
    s.m_ = std::move(m);
    return s;
  }

  std::size_t n() const noexcept { return m_.rows() / 2; }
  const BinMatrix& matrix() const noexcept { return m_; }
  const BitVec& row(std::size_t r) const { return m_.row(r); }

  /// Row-vector action v -> vF.
  SymplecticVector apply(const SymplecticVector& v) const { return m_.left_apply(v); }

  SymplecticMatrix inverse() const {
    // F^{-1} = Omega F^T Omega.
    const BinMatrix om = omega(n());
    return trusted(om * m_.transpose() * om);
  }

  friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    return trusted(a.m_ * b.m_);
  }
  friend bool operator==(const SymplecticMatrix& a, const SymplecticMatrix& b) { return a.m_ == b.m_; }
  friend bool operator!=(const SymplecticMatrix& a, const SymplecticMatrix& b) { return !(a == b); }

  std::size_t hash() const { return m_.hash(); }

 private:
  BinMatrix m_;
};

struct SymplecticMatrixHash {
  std::size_t operator()(const SymplecticMatrix& f) const { return f.hash(); }
};

/// <vF, v> = 0 for all v. The quadratic form v F Omega v^T vanishes
/// identically iff its Gram matrix F Omega is symmetric with zero diagonal.
inline bool is_hyperbolic(const SymplecticMatrix& f) {
  const BinMatrix g = f.matrix() * omega(f.n());
  return g.is_symmetric() && g.has_zero_diagonal();
}

inline bool is_involution(const SymplecticMatrix& f) { return (f * f).matrix() == BinMatrix::identity(2 * f.n()); }

/// T_v = I + Omega v^T v, acting as w -> w + <w,v> v.
inline SymplecticMatrix transvection(const SymplecticVector& v) {
  if (v.size() % 2 != 0) throw Error(ErrorCode::Dimension, "symplectic vector of odd length");
  const std::size_t dim = v.size();
  const std::size_t n = dim / 2;
  BinMatrix m = BinMatrix::identity(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    // Row r of Omega v^T v is v_{swap(r)} * v.
    const std::size_t partner = r < n ? r + n : r - n;
    if (v.get(partner)) m.row(r) ^= v;
  }
  return SymplecticMatrix::trusted(std::move(m));
}

inline SymplecticMatrix transvection_product(const std::vector<SymplecticVector>& vs, std::size_t n) {
  SymplecticMatrix f = SymplecticMatrix::identity(n);
  for (const auto& v : vs) f = f * transvection(v);
  return f;
}

struct ResidueSpace {
  std::vector<SymplecticVector> basis;
  std::size_t dim = 0;
};

/// Res(F) = rs(I + F).
inline ResidueSpace residue_space(const SymplecticMatrix& f) {
  auto [basis, rank] = gf2_rowspace(f.matrix() + BinMatrix::identity(2 * f.n()));
  return {std::move(basis), rank};
}

inline bool is_isotropic(const std::vector<SymplecticVector>& vs) {
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (symplectic_inner(vs[a], vs[b])) return false;
    }
  }
  return true;
}

namespace symplectic_detail {

// P with P Q P^T = I for a symmetric invertible non-alternating Q, built as
// an orthonormal basis for B(x, y) = x Q y^T.
inline BinMatrix orthonormal_basis(const BinMatrix& q) {
  const std::size_t r = q.rows();
  auto form = [&q](const BitVec& x, const BitVec& y) { return q.left_apply(x).dot(y); };
  std::vector<BitVec> pending;
  for (std::size_t j = 0; j < r; ++j) pending.push_back(BitVec::unit(r, j));
  std::vector<BitVec> done;
  while (!pending.empty()) {
    auto odd = std::find_if(pending.begin(), pending.end(), [&](const BitVec& w) { return form(w, w); });
    if (odd != pending.end()) {
      const BitVec w = *odd;
      pending.erase(odd);
      for (auto& other : pending) {
        if (form(other, w)) other ^= w;
      }
      done.push_back(w);
      continue;
    }
    // The remaining span is alternating: split off a hyperbolic pair y, z and
    // trade it together with an earlier unit vector x for three unit vectors.
    const BitVec y = pending.front();
    auto partner = std::find_if(pending.begin() + 1, pending.end(), [&](const BitVec& w) { return form(y, w); });
    if (partner == pending.end() || done.empty()) {
      throw Error(ErrorCode::DecompositionNotFound, "degenerate form in involution factorization");
    }
    const BitVec z = *partner;
    pending.erase(partner);
    pending.erase(pending.begin());
    for (auto& other : pending) {
      const bool by = form(other, y);
      const bool bz = form(other, z);
      if (bz) other ^= y;
      if (by) other ^= z;
    }
    const BitVec x = done.back();
    done.pop_back();
    done.push_back(x + y + z);
    done.push_back(x + y);
    done.push_back(x + z);
  }
  return BinMatrix::from_rows(std::move(done), r);
}

}  // namespace symplectic_detail

/// Writes a symplectic involution F as T_{u_1} ... T_{u_r} T_u with the u_j a
/// basis of Res(F) and u in Res(F), r = dim Res(F). Returns [u_1, ..., u_r, u]
/// where u may be zero, or an empty list for F = I.
inline std::vector<SymplecticVector> decompose_involution(const SymplecticMatrix& f) {
  if (!is_involution(f)) throw Error(ErrorCode::NotInvolution, "F^2 != I");
  const std::size_t n = f.n();
  const std::size_t dim = 2 * n;
  const BinMatrix nmat = f.matrix() + BinMatrix::identity(dim);
  const RowEchelon ech = row_echelon(nmat);
  const std::size_t r = ech.rank();
  if (r == 0) return {};
  const BinMatrix v = BinMatrix::from_rows(ech.basis, dim);

  // N = Omega V^T Q V. With V in reduced echelon form, row s of Q is read off
  // the coordinates of row swap(p_s) of N, p_s being the pivot of row s.
  BinMatrix q(r, r);
  for (std::size_t s = 0; s < r; ++s) {
    const std::size_t p = ech.pivots[s];
    const BitVec& src = nmat.row(p < n ? p + n : p - n);
    for (std::size_t t = 0; t < r; ++t) q.set(s, t, src.get(ech.pivots[t]));
  }
  if (omega(n) * v.transpose() * q * v != nmat || !q.is_symmetric()) {
    throw Error(ErrorCode::DecompositionNotFound, "residue form does not reproduce I + F");
  }

  // Sum of squares: Q' = Q (+ e_1^T e_1 when Q is alternating) = C^T C.
  BinMatrix qprime = q;
  BitVec extra(r);
  if (q.has_zero_diagonal()) {
    qprime.set(0, 0, true);
    extra.set(0, true);
  }
  const BinMatrix c = gf2_inverse(symplectic_detail::orthonormal_basis(qprime)).transpose();

  std::vector<SymplecticVector> out;
  out.reserve(r + 1);
  for (std::size_t j = 0; j < r; ++j) out.push_back(v.left_apply(c.row(j)));
  out.push_back(v.left_apply(extra));
  if (transvection_product(out, n) != f) {
    throw Error(ErrorCode::DecompositionNotFound, "transvection product does not reproduce F");
  }
  return out;
}

/// decompose_involution restricted to hyperbolic involutions.
inline std::vector<SymplecticVector> decompose_hyperbolic_involution(const SymplecticMatrix& f) {
  if (!is_hyperbolic(f)) throw Error(ErrorCode::NotHyperbolic, "F is not hyperbolic");
  return decompose_involution(f);
}

/// Vectors w_1..w_m with F = T_{w_m} ... T_{w_1}, found by reducing F to the
/// identity one symplectic pair (e_i, f_i) at a time.
inline std::vector<SymplecticVector> transvection_factors(const SymplecticMatrix& f) {
  const std::size_t n = f.n();
  const std::size_t dim = 2 * n;
  std::vector<SymplecticVector> ws;
  BinMatrix m = f.matrix();
  auto apply = [&](const SymplecticVector& w) {
    if (w.none()) return;
    m = m * transvection(w).matrix();
    ws.push_back(w);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const BitVec e = BitVec::unit(dim, i);
    const BitVec fi = BitVec::unit(dim, n + i);
    const BitVec a = m.row(i);
    if (a != e) {
      if (symplectic_inner(a, e)) {
        apply(a + e);
      } else {
        BitVec z = fi;
        if (!symplectic_inner(a, fi)) {
          std::size_t k = 0;
          while (k < dim && (k % n == i || !a.get(k))) ++k;
          if (k == dim) throw Error(ErrorCode::NotSymplectic, "row reduction hit a zero row");
          // An X component at k pairs with f_k, a Z component with e_k.
          z ^= BitVec::unit(dim, k < n ? k + n : k - n);
        }
        apply(a + z);
        apply(z + e);
      }
    }
    const BitVec b = m.row(n + i);
    if (b != fi) {
      if (symplectic_inner(b, fi)) {
        apply(b + fi);
      } else {
        const BitVec z = e + fi;
        apply(b + z);
        apply(e);
      }
    }
  }
  if (m != BinMatrix::identity(dim)) throw Error(ErrorCode::NotSymplectic, "input is not symplectic");
  return ws;
}

/// Symplectic G with v_i G = e_{n+i} for independent, pairwise orthogonal v_i.
inline SymplecticMatrix symplectic_complete(const std::vector<SymplecticVector>& vs) {
  if (vs.empty()) throw Error(ErrorCode::NotIndependent, "no vectors given");
  const std::size_t dim = vs.front().size();
  if (dim % 2 != 0) throw Error(ErrorCode::Dimension, "symplectic vector of odd length");
  const std::size_t n = dim / 2;
  for (const auto& v : vs) {
    if (v.size() != dim) throw Error(ErrorCode::Dimension, "vector lengths differ");
  }
  if (gf2_rank(vs, dim) != vs.size()) throw Error(ErrorCode::NotIndependent, "vectors are linearly dependent");
  if (!is_isotropic(vs)) throw Error(ErrorCode::NotIsotropic, "vectors are not pairwise orthogonal");

  const BinMatrix om = omega(n);
  std::vector<BitVec> xs;  // partners, become rows 0..n-1
  std::vector<BitVec> zs;  // become rows n..2n-1
  // Dual partners u_i with <u_i, v_j> = delta_ij and <u_i, u_k> = 0.
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::vector<BitVec> constraints = vs;
    constraints.insert(constraints.end(), xs.begin(), xs.end());
    BitVec target(constraints.size());
    target.set(i, true);
    const BinMatrix k = om * BinMatrix::from_rows(constraints, dim).transpose();
    auto u = gf2_solve_left(k, target);
    if (!u) throw Error(ErrorCode::NotIndependent, "no dual partner found");
    xs.push_back(*u);
  }
  zs = vs;
  // Complete with hyperbolic pairs from the orthogonal complement.
  auto project = [&](BitVec s) {
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const bool sx = symplectic_inner(s, xs[j]);
      const bool sz = symplectic_inner(s, zs[j]);
      if (sz) s ^= xs[j];
      if (sx) s ^= zs[j];
    }
    return s;
  };
  while (xs.size() < n) {
    bool added = false;
    for (std::size_t a = 0; a < dim && !added; ++a) {
      const BitVec x = project(BitVec::unit(dim, a));
      if (x.none()) continue;
      for (std::size_t b = 0; b < dim && !added; ++b) {
        const BitVec y = project(BitVec::unit(dim, b));
        if (symplectic_inner(x, y)) {
          xs.push_back(y);
          zs.push_back(x);
          added = true;
        }
      }
    }
    if (!added) throw Error(ErrorCode::NotIndependent, "symplectic completion failed");
  }
  std::vector<BitVec> rows = xs;
  rows.insert(rows.end(), zs.begin(), zs.end());
  const SymplecticMatrix s(BinMatrix::from_rows(std::move(rows), dim));
  return s.inverse();
}

/// All of Sp(2n) by closure under transvections; practical for n <= 2.
inline std::vector<SymplecticMatrix> enumerate_sp(std::size_t n) {
  if (n == 0 || n > 2) throw Error(ErrorCode::BudgetExceeded, "Sp(2n) enumeration supports n = 1, 2");
  const std::size_t dim = 2 * n;
  std::vector<SymplecticMatrix> gens;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << dim); ++bits) {
    BitVec v(dim);
    for (std::size_t j = 0; j < dim; ++j) v.set(j, (bits >> j) & 1U);
    gens.push_back(transvection(v));
  }
  std::unordered_set<SymplecticMatrix, SymplecticMatrixHash> seen;
  std::vector<SymplecticMatrix> order;
  std::queue<SymplecticMatrix> frontier;
  const SymplecticMatrix id = SymplecticMatrix::identity(n);
  seen.insert(id);
  order.push_back(id);
  frontier.push(id);
  while (!frontier.empty()) {
    const SymplecticMatrix cur = frontier.front();
    frontier.pop();
    for (const auto& g : gens) {
      SymplecticMatrix next = cur * g;
      if (seen.insert(next).second) {
        order.push_back(next);
        frontier.push(std::move(next));
      }
    }
  }
  return order;
}

/// Product of random transvections; the distribution is not uniform.
template <typename Rng>
SymplecticMatrix random_symplectic(std::size_t n, Rng& rng) {
  const std::size_t dim = 2 * n;
  std::bernoulli_distribution coin(0.5);
  SymplecticMatrix f = SymplecticMatrix::identity(n);
  for (std::size_t step = 0; step < 4 * dim * dim; ++step) {
    BitVec v(dim);
    for (std::size_t j = 0; j < dim; ++j) v.set(j, coin(rng));
    f = f * transvection(v);
  }
  return f;
}

/// Text rendering with separators between the four n x n blocks.
inline std::string to_pretty(const SymplecticMatrix& f) {
  const std::size_t n = f.n();
  std::ostringstream out;
  for (std::size_t r = 0; r < 2 * n; ++r) {
    if (r == n) out << std::string(n, '-') << "+" << std::string(n, '-') << "\n";
    const std::string bits = f.row(r).to_string();
    out << bits.substr(0, n) << "|" << bits.substr(n) << "\n";
  }
  return out.str();
}

}  // namespace climb
