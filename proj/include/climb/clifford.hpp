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

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "climb/error.hpp"
#include "climb/gf2.hpp"
#include "climb/matrix.hpp"
#include "climb/pauli.hpp"
#include "climb/symplectic.hpp"

namespace climb {

/// A Clifford gate's action on the generators X_1..X_n, Z_1..Z_n.
struct CliffordRep {
  int n = 0;
  SymplecticMatrix F;
  std::vector<PauliOp> images;  // signed Hermitian Paulis
};

namespace clifford_detail {

inline PauliOp signed_image(const PhasedPauli& p) {
  if (p.phase == RingScalar::one()) return p.pauli;
  if (p.phase == RingScalar::from_int(-1)) return negated(p.pauli);
  throw Error(ErrorCode::NotClifford, "conjugate of a Hermitian Pauli is not Hermitian");
}

// Bit j of the row vector x is qubit j + 1, the (n-1-j)-th bit of the index.
inline BitVec index_to_row(int n, std::size_t idx) {
  BitVec v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) v.set(static_cast<std::size_t>(j), (idx >> (n - 1 - j)) & 1U);
  return v;
}

inline std::size_t row_to_index(const BitVec& v) {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < v.size(); ++j) idx = (idx << 1) | (v.get(j) ? 1U : 0U);
  return idx;
}

}  // namespace clifford_detail

/// F_C and the signed generator images; throws NotClifford otherwise.
inline CliffordRep symplectic_of(const ExactUnitary& u) {
  const int n = u.qubits();
  CliffordRep rep;
  rep.n = n;
  std::vector<BitVec> rows;
  for (const PauliOp& g : pauli_generators(n)) {
    auto image = conjugated_pauli(u.matrix(), g);
    if (!image) throw Error(ErrorCode::NotClifford, "U " + to_string(g) + " U^dagger is not a Pauli");
    rep.images.push_back(clifford_detail::signed_image(*image));
    rows.push_back(to_symplectic(image->pauli));
  }
  rep.F = SymplecticMatrix(BinMatrix::from_rows(std::move(rows), 2 * static_cast<std::size_t>(n)));
  return rep;
}

inline bool is_clifford(const ExactUnitary& u) {
  for (const PauliOp& g : pauli_generators(u.qubits())) {
    if (!conjugated_pauli(u.matrix(), g)) return false;
  }
  return true;
}

/// C_v = (I + sign * i E(v)) / sqrt2.
inline ExactUnitary clifford_transvection(const SymplecticVector& v, int sign = 1) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::Dimension, "sign must be +1 or -1");
  const PauliOp e = hermitian_rep(v);
  const std::size_t dim = std::size_t{1} << e.n;
  Matrix m = pauli_to_matrix(e).matrix().scaled(RingScalar::i().times_i_power(sign == 1 ? 0 : 2));
  for (std::size_t j = 0; j < dim; ++j) m(j, j) += RingScalar::one();
  return ExactUnitary::trusted(m.scaled(RingScalar::inv_sqrt2()));
}

/// A fixed unitary with symplectic image F: the product of Clifford
/// transvections over transvection_factors(F), each with sign +1.
inline ExactUnitary clifford_from_symplectic(const SymplecticMatrix& f) {
  const int n = static_cast<int>(f.n());
  const auto ws = transvection_factors(f);
  // F = T_{w_m} ... T_{w_1} and F_{AB} = F_B F_A, so C = C_{w_1} ... C_{w_m};
  // build it right to left with O(N^2) Pauli shortcuts.
  Matrix c = Matrix::identity(std::size_t{1} << n);
  for (auto it = ws.rbegin(); it != ws.rend(); ++it) {
    const PauliOp e = hermitian_rep(*it);
    c = (c + left_mul_pauli(e, c).scaled(RingScalar::i())).scaled(RingScalar::inv_sqrt2());
  }
  return ExactUnitary::trusted(std::move(c));
}

struct PauliTerm {
  PauliOp pauli;  // Hermitian representative
  RingScalar coeff;
};

/// U = sum over terms of coeff * E, coeff = Tr(E U) / 2^n.
struct PauliExpansion {
  int n = 0;
  std::optional<std::size_t> residue_dim;  // set for Clifford inputs
  std::vector<PauliTerm> terms;
  bool subgroup = false;  // support classes closed under multiplication

  Matrix reconstruct() const {
    Matrix m(std::size_t{1} << n);
    for (const auto& t : terms) m = m + pauli_to_matrix(t.pauli).matrix().scaled(t.coeff);
    return m;
  }
};

/// Tr(P M) using the monomial structure of P.
inline RingScalar pauli_trace(const PauliOp& p, const Matrix& m) {
  RingAccumulator acc;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const std::size_t k = j ^ p.x;
    const RingScalar& v = m(k, j);
    if (!v.is_zero()) acc.add(v.times_i_power(pauli_detail::column_phase(p, k)));
  }
  return acc.result();
}

inline PauliExpansion pauli_expand(const ExactUnitary& u) {
  PauliExpansion out;
  out.n = u.qubits();
  const RingScalar scale = RingScalar::one().scaled_inv_sqrt2(2 * static_cast<unsigned>(out.n));
  std::set<std::pair<std::uint64_t, std::uint64_t>> support;
  for (const PauliOp& cls : enumerate_pauli_classes(out.n)) {
    const PauliOp e = hermitian_rep(cls.n, cls.x, cls.z);
    RingScalar coeff = pauli_trace(e, u.matrix()) * scale;
    if (coeff.is_zero()) continue;
    support.emplace(e.x, e.z);
    out.terms.push_back({e, std::move(coeff)});
  }
  out.subgroup = support.count({0, 0}) == 1;
  for (const auto& a : support) {
    for (const auto& b : support) {
      if (out.subgroup && support.count({a.first ^ b.first, a.second ^ b.second}) == 0) out.subgroup = false;
    }
  }
  if (is_clifford(u)) out.residue_dim = residue_space(symplectic_of(u).F).dim;
  return out;
}

/// Clifford C with C E1 C^dagger = Z_1 and C E2 C^dagger = Z_2 exactly.
inline ExactUnitary diagonalizer(const PauliOp& e1, const PauliOp& e2) {
  check_same_qubits(e1, e2);
  const int n = e1.n;
  if (n < 2) throw Error(ErrorCode::Dimension, "diagonalizer needs at least two qubits");
  if (!is_hermitian(e1) || !is_hermitian(e2)) throw Error(ErrorCode::NotHermitian, "inputs must be Hermitian");
  if (pauli_anticommute(e1, e2)) throw Error(ErrorCode::NotCommuting, "inputs anticommute");
  if (e1.is_identity_class() || e2.is_identity_class() || e1.same_class(e2)) {
    throw Error(ErrorCode::NotIndependent, "inputs are not independent");
  }
  const SymplecticMatrix g = symplectic_complete({to_symplectic(e1), to_symplectic(e2)});
  Matrix c = clifford_from_symplectic(g).matrix();
  // An X on qubit j flips the sign of Z_j only.
  std::uint64_t flips = 0;
  for (int q = 1; q <= 2; ++q) {
    const PauliOp& src = q == 1 ? e1 : e2;
    auto image = conjugated_pauli(c, src);
    if (!image || !image->pauli.same_class(PauliOp::z_on(n, q))) {
      throw Error(ErrorCode::NotClifford, "diagonalizer image mismatch");
    }
    if (image->phase == RingScalar::from_int(-1)) flips |= PauliOp::qubit_bit(n, q);
  }
  if (flips != 0) c = left_mul_pauli(PauliOp::make(n, flips, 0, 0), c);
  return ExactUnitary::trusted(std::move(c));
}

/// Diagonal gate with entry i^{x A x^T} at basis state x.
inline ExactUnitary diagonal_clifford(const BinMatrix& a) {
  if (!a.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "A must be symmetric");
  const int n = static_cast<int>(a.rows());
  const std::size_t dim = std::size_t{1} << n;
  Matrix m(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const BitVec x = clifford_detail::index_to_row(n, idx);
    int power = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!x.get(j)) continue;
      power += a.get(j, j) ? 1 : 0;
      for (std::size_t k = j + 1; k < x.size(); ++k) power += (x.get(k) && a.get(j, k)) ? 2 : 0;
    }
    m(idx, idx) = RingScalar::one().times_i_power(power);
  }
  return ExactUnitary::trusted(std::move(m));
}

/// Permutation gate |x> -> |xB>.
inline ExactUnitary permutation_clifford(const BinMatrix& b) {
  gf2_inverse(b);  // throws NotInvertible
  const int n = static_cast<int>(b.rows());
  const std::size_t dim = std::size_t{1} << n;
  Matrix m(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    m(clifford_detail::row_to_index(b.left_apply(clifford_detail::index_to_row(n, idx))), idx) = RingScalar::one();
  }
  return ExactUnitary::trusted(std::move(m));
}

enum class ClimberFamily { diagonal, permutation };

/// Parameters of the Hermitian Cliffords whose square roots climb:
/// symmetric zero-diagonal A of rank 2, or involutive B with rank(I + B) = 1.
struct FamilyEnumeration {
  ClimberFamily family = ClimberFamily::diagonal;
  int n = 0;
  std::vector<BinMatrix> parameters;

  std::size_t count() const { return parameters.size(); }
  ExactUnitary gate(std::size_t j) const {
    return family == ClimberFamily::diagonal ? diagonal_clifford(parameters.at(j))
                                             : permutation_clifford(parameters.at(j));
  }
};

inline FamilyEnumeration enumerate_climber_family(ClimberFamily family, int n) {
  if (n < 1 || n > 6) throw Error(ErrorCode::BudgetExceeded, "family enumeration supports 1 <= n <= 6");
  const auto un = static_cast<std::size_t>(n);
  FamilyEnumeration out;
  out.family = family;
  out.n = n;
  if (family == ClimberFamily::diagonal) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t j = 0; j < un; ++j) {
      for (std::size_t k = j + 1; k < un; ++k) slots.emplace_back(j, k);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      BinMatrix a(un, un);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if ((mask >> s) & 1U) {
          a.set(slots[s].first, slots[s].second, true);
          a.set(slots[s].second, slots[s].first, true);
        }
      }
      if (gf2_rank(a) == 2) out.parameters.push_back(std::move(a));
    }
    return out;
  }
  const BinMatrix id = BinMatrix::identity(un);
  if (n <= 4) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (un * un)); ++mask) {
      BinMatrix b(un, un);
      for (std::size_t s = 0; s < un * un; ++s) b.set(s / un, s % un, (mask >> s) & 1U);
      if (b * b == id && gf2_rank(b + id) == 1) out.parameters.push_back(std::move(b));
    }
    return out;
  }
  // B = I + a^T b with a, b nonzero and a.b = 0; each rank-one a^T b arises once.
  for (std::uint64_t am = 1; am < (std::uint64_t{1} << un); ++am) {
    for (std::uint64_t bm = 1; bm < (std::uint64_t{1} << un); ++bm) {
      if (std::popcount(am & bm) % 2 != 0) continue;
      BinMatrix b = id;
      for (std::size_t r = 0; r < un; ++r) {
        for (std::size_t c = 0; c < un; ++c) {
          if (((am >> r) & 1U) && ((bm >> c) & 1U)) b.set(r, c, !b.get(r, c));
        }
      }
      out.parameters.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace climb
