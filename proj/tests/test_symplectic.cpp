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

#include <gtest/gtest.h>

#include <random>

#include "climb/clifford.hpp"
#include "climb/symplectic.hpp"
#include "oracles.hpp"

namespace climb {
namespace {

using oracle::bits;

const std::vector<SymplecticMatrix>& sp4() {
  static const std::vector<SymplecticMatrix> group = enumerate_sp(2);
  return group;
}

BitVec vec(const std::string& s) { return BitVec::from_string(s); }

TEST(Gf2, RowspaceExamples) {
  EXPECT_EQ(gf2_rowspace(BinMatrix(3, 3)).second, 0U);
  EXPECT_EQ(gf2_rowspace(BinMatrix::identity(4)).second, 4U);
  EXPECT_EQ(gf2_rowspace(bits({"0001", "0010", "0100", "1000"})).second, 4U);
  EXPECT_EQ(gf2_rank(bits({"110", "011", "101"})), 2U);
}

TEST(Gf2, InverseAndSolve) {
  const BinMatrix m = bits({"110", "011", "001"});
  EXPECT_EQ(m * gf2_inverse(m), BinMatrix::identity(3));
  EXPECT_THROW(gf2_inverse(bits({"11", "11"})), Error);
  const auto x = gf2_solve_left(m, vec("101"));
  ASSERT_TRUE(x);
  EXPECT_EQ(m.left_apply(*x), vec("101"));
  EXPECT_FALSE(gf2_solve_left(bits({"110", "011"}), vec("100")));
}

TEST(Sp4, OrderIs720) { EXPECT_EQ(sp4().size(), 720U); }

TEST(Symplectic, RejectsNonSymplectic) {
  EXPECT_THROW(SymplecticMatrix(bits({"11", "00"})), Error);
  EXPECT_NO_THROW(SymplecticMatrix(bits({"01", "10"})));
}

TEST(Hyperbolic, Examples) {
  EXPECT_TRUE(is_hyperbolic(SymplecticMatrix::identity(2)));
  EXPECT_FALSE(is_hyperbolic(SymplecticMatrix(bits({"01", "10"}))));
  // Diagonal form [[I, A], [0, I]] with A symmetric and zero diagonal.
  const BinMatrix a = bits({"011", "101", "110"});
  const BinMatrix z(3, 3);
  EXPECT_TRUE(is_hyperbolic(SymplecticMatrix(block_matrix(BinMatrix::identity(3), a, z, BinMatrix::identity(3)))));
}

TEST(Hyperbolic, MatchesQuantifierOnSp4) {
  for (const auto& f : sp4()) ASSERT_EQ(is_hyperbolic(f), oracle::hyperbolic_by_quantifier(f));
}

TEST(Hyperbolic, MatchesQuantifierOnSamples) {
  std::mt19937_64 rng(31);
  for (std::size_t n : {3U, 4U}) {
    for (int t = 0; t < 60; ++t) {
      const SymplecticMatrix f = random_symplectic(n, rng);
      ASSERT_EQ(is_hyperbolic(f), oracle::hyperbolic_by_quantifier(f));
      // Random elements are rarely hyperbolic; conjugates of a diagonal form are.
      BinMatrix a(n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          const bool bit = rng() & 1U;
          a.set(j, k, bit);
          a.set(k, j, bit);
        }
      const SymplecticMatrix d(block_matrix(BinMatrix::identity(n), a, BinMatrix(n, n), BinMatrix::identity(n)));
      const SymplecticMatrix g = f.inverse() * d * f;
      ASSERT_TRUE(is_hyperbolic(g));
      ASSERT_EQ(is_hyperbolic(g), oracle::hyperbolic_by_quantifier(g));
    }
  }
}

TEST(Transvection, Examples) {
  EXPECT_EQ(transvection(BitVec(4)), SymplecticMatrix::identity(2));
  for (std::uint64_t t = 0; t < 16; ++t) {
    BitVec v(4);
    for (std::size_t j = 0; j < 4; ++j) v.set(j, (t >> j) & 1U);
    const SymplecticMatrix tv = transvection(v);
    ASSERT_NO_THROW(SymplecticMatrix(tv.matrix()));
    ASSERT_EQ(tv * tv, SymplecticMatrix::identity(2));
    for (std::uint64_t s = 0; s < 16; ++s) {
      BitVec w(4);
      for (std::size_t j = 0; j < 4; ++j) w.set(j, (s >> j) & 1U);
      BitVec expect = w;
      if (symplectic_inner(w, v)) expect ^= v;
      ASSERT_EQ(tv.apply(w), expect);
    }
    const ResidueSpace res = residue_space(tv);
    ASSERT_EQ(res.dim, v.any() ? 1U : 0U);
    if (v.any()) {
      ASSERT_EQ(res.basis.front(), v);
    }
  }
}

TEST(Residue, Examples) {
  EXPECT_EQ(residue_space(SymplecticMatrix::identity(3)).dim, 0U);
  EXPECT_EQ(residue_space(symplectic_of(gates::CZ()).F).dim, 2U);
  const ExactUnitary c = embed(gates::CZ(), {1, 4}, 4) * embed(gates::CZ(), {2, 3}, 4);
  EXPECT_EQ(residue_space(symplectic_of(c).F).dim, 4U);
}

TEST(Involution, Examples) {
  EXPECT_TRUE(is_involution(SymplecticMatrix::identity(1)));
  EXPECT_TRUE(is_involution(symplectic_of(gates::SWAP()).F));
  // F_S squares to I over GF(2) because S^2 = Z is a Pauli.
  EXPECT_TRUE(is_involution(SymplecticMatrix(bits({"11", "01"}))));
  EXPECT_EQ(symplectic_of(gates::S()).F, SymplecticMatrix(bits({"11", "01"})));
  EXPECT_FALSE(is_involution(symplectic_of(gates::H() * gates::S()).F));
}

TEST(DecomposeInvolution, Examples) {
  EXPECT_TRUE(decompose_involution(SymplecticMatrix::identity(2)).empty());
  const BitVec u = vec("1011");
  const auto vs = decompose_involution(transvection(u));
  ASSERT_EQ(vs.size(), 2U);
  EXPECT_EQ(vs[0], u);
  EXPECT_TRUE(vs[1].none());
  EXPECT_THROW(decompose_involution(SymplecticMatrix(bits({"01", "11"}))), Error);
  EXPECT_THROW(decompose_hyperbolic_involution(transvection(u)), Error);
}

// Every involution of Sp(4): the factors reproduce F, lie in Res(F), number
// dim Res(F) + 1, and the trailing vector vanishes exactly for the
// non-hyperbolic ones.
TEST(DecomposeInvolution, ExhaustiveSp4) {
  int involutions = 0;
  for (const auto& f : sp4()) {
    if (!is_involution(f)) continue;
    ++involutions;
    const auto vs = decompose_involution(f);
    const ResidueSpace res = residue_space(f);
    ASSERT_EQ(transvection_product(vs, 2), f);
    if (res.dim == 0) {
      ASSERT_TRUE(vs.empty());
      continue;
    }
    ASSERT_EQ(vs.size(), res.dim + 1);
    ASSERT_EQ(gf2_rank(std::vector<BitVec>(vs.begin(), vs.end() - 1), 4), res.dim);
    const BinMatrix basis = BinMatrix::from_rows(res.basis, 4);
    for (const auto& v : vs) ASSERT_TRUE(gf2_solve_left(basis, v) || v.none());
    ASSERT_EQ(vs.back().none(), !is_hyperbolic(f));
  }
  EXPECT_EQ(involutions, 76);
}

TEST(DecomposeInvolution, SampledSp6AndSp8) {
  std::mt19937_64 rng(41);
  for (std::size_t n : {3U, 4U}) {
    for (int t = 0; t < 40; ++t) {
      const SymplecticMatrix f = random_symplectic(n, rng);
      // Conjugates of products of mutually orthogonal transvections are involutions.
      std::vector<BitVec> vs;
      for (std::size_t j = 0; j < n; ++j) {
        if (rng() & 1U) vs.push_back(f.row(n + j));
      }
      const SymplecticMatrix g = transvection_product(vs, n);
      ASSERT_TRUE(is_involution(g));
      ASSERT_EQ(transvection_product(decompose_involution(g), n), g);
    }
  }
}

TEST(ResidueSpace, IsotropicForInvolutionsOfSp4) {
  for (const auto& f : sp4()) {
    if (!is_involution(f)) continue;
    const auto basis = residue_space(f).basis;
    for (const auto& x : basis)
      for (const auto& y : basis) ASSERT_FALSE(symplectic_inner(x, y));
  }
}

TEST(TransvectionFactors, ExhaustiveSp4) {
  for (const auto& f : sp4()) {
    auto ws = transvection_factors(f);
    std::reverse(ws.begin(), ws.end());
    ASSERT_EQ(transvection_product(ws, 2), f);
  }
}

TEST(SymplecticComplete, Examples) {
  EXPECT_EQ(symplectic_complete({vec("01")}).apply(vec("01")), vec("01"));
  const SymplecticMatrix g = symplectic_complete({vec("10")});
  EXPECT_EQ(g.apply(vec("10")), vec("01"));
  EXPECT_THROW(symplectic_complete({vec("1000"), vec("1000")}), Error);
  EXPECT_THROW(symplectic_complete({vec("1000"), vec("0010")}), Error);
  try {
    symplectic_complete({vec("1000"), vec("0010")});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIsotropic);
  }
}

TEST(SymplecticComplete, RandomIsotropicPairs) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    const SymplecticMatrix f = random_symplectic(3, rng);
    // Rows n.. of a symplectic matrix are pairwise orthogonal.
    const std::vector<BitVec> vs = {f.row(3) ^ f.row(5), f.row(4)};
    const SymplecticMatrix g = symplectic_complete(vs);
    ASSERT_NO_THROW(SymplecticMatrix(g.matrix()));
    ASSERT_EQ(g.apply(vs[0]), BitVec::unit(6, 3));
    ASSERT_EQ(g.apply(vs[1]), BitVec::unit(6, 4));
  }
}

TEST(PrettyPrint, BlockSeparators) {
  EXPECT_EQ(to_pretty(SymplecticMatrix::identity(1)), "1|0\n-+-\n0|1\n");
}

}  // namespace
}  // namespace climb
