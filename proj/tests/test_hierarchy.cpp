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

#include <cstdlib>
#include <random>

#include "climb/clifford.hpp"
#include "climb/hierarchy.hpp"
#include "oracles.hpp"

namespace climb {
namespace {

using oracle::bits;

const RingScalar kOmega = RingScalar::omega();

Matrix dense_conjugate(const Matrix& u, const Matrix& m) {
  return oracle::naive_mul(oracle::naive_mul(u, m), oracle::naive_adjoint(u));
}

ExactUnitary t_gate() {
  Matrix t = Matrix::identity(2);
  t(1, 1) = kOmega;
  return ExactUnitary::from_matrix(t);
}

std::vector<ExactUnitary> hermitian_library() {
  return {gates::X(),  gates::Y(),    gates::Z(),     gates::H(),  gates::SWAP(),
          gates::CZ(), gates::CX(),   gates::CCX(),   gates::CSWAP()};
}

TEST(Hat, Examples) {
  EXPECT_EQ(hat(gates::I()).matrix(), Matrix::identity(2).scaled(kOmega));
  EXPECT_EQ(hat(gates::Z()).matrix(), gates::Sdg().matrix().scaled(kOmega));
  EXPECT_EQ(hat(gates::CX()).matrix(), controlled(gates::R(), 1).matrix().scaled(kOmega));
  EXPECT_EQ(hat(gates::CCX()).matrix(), controlled(gates::R(), 2).matrix().scaled(kOmega));
  EXPECT_THROW(hat(gates::S()), Error);
}

TEST(Hat, SquaresToIU) {
  for (const auto& u : hermitian_library()) {
    const ExactUnitary h = hat(u);
    EXPECT_EQ(oracle::naive_mul(h.matrix(), h.matrix()), u.matrix().scaled(RingScalar::i()));
  }
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const ExactUnitary u = random_hermitian_clifford(1 + t % 3, rng);
    const ExactUnitary h = hat(u);
    ASSERT_EQ((h * h).matrix(), u.matrix().scaled(RingScalar::i()));
  }
}

TEST(Controlled, BlockStructure) {
  EXPECT_EQ(controlled(gates::X(), 1).matrix(), oracle::block_controlled(gates::X().matrix()));
  EXPECT_EQ(gates::CX().matrix(), oracle::ints(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}));
  EXPECT_EQ(controlled(gates::X(), 2).matrix(),
            oracle::block_controlled(oracle::block_controlled(gates::X().matrix())));
  EXPECT_EQ(controlled(gates::SWAP(), 1).matrix(), oracle::block_controlled(gates::SWAP().matrix()));
  EXPECT_EQ(controlled(gates::H(), 0), gates::H());
}

TEST(ConjugationExpansion, MatchesDenseProduct) {
  // hat(U) P hat(U)^dagger = (P + iUP - iPU + UPU) / 2.
  std::mt19937_64 rng(9);
  std::vector<ExactUnitary> us = hermitian_library();
  for (int t = 0; t < 6; ++t) us.push_back(random_hermitian_clifford(3, rng));
  for (const auto& u : us) {
    for (int t = 0; t < 6; ++t) {
      const Matrix p = oracle::pauli_matrix(oracle::random_pauli(u.qubits(), rng));
      const Matrix& um = u.matrix();
      const Matrix rhs = (p + oracle::naive_mul(um, p).scaled(RingScalar::i()) -
                          oracle::naive_mul(p, um).scaled(RingScalar::i()) +
                          oracle::naive_mul(oracle::naive_mul(um, p), um))
                             .scaled(RingScalar::half());
      ASSERT_EQ(dense_conjugate(hat(u).matrix(), p), rhs);
    }
  }
}

TEST(CounterObstruction, Hadamard) {
  const auto pair = counter_obstruction(gates::H());
  ASSERT_TRUE(pair.has_value());
  EXPECT_EQ(to_string(pair->first), "X");
  EXPECT_EQ(to_string(pair->second), "Z");
  const Matrix h = hat(gates::H()).matrix();
  const Matrix lhs = dense_conjugate(h, gates::X().matrix());
  // hat(H) X hat(H)^dagger = -i X hat(H) Z, a Pauli-sandwiched copy of hat(H).
  EXPECT_EQ(lhs, oracle::naive_mul(oracle::naive_mul(gates::X().matrix(), h), gates::Z().matrix())
                     .scaled(-RingScalar::i()));
  // The shorter form -hat(H) Y would need X to commute with hat(H); it does not.
  EXPECT_NE(lhs, -oracle::naive_mul(h, gates::Y().matrix()));
}

TEST(CounterObstruction, NoneForHyperbolic) {
  EXPECT_FALSE(counter_obstruction(gates::CZ()).has_value());
  EXPECT_FALSE(counter_obstruction(gates::SWAP()).has_value());
  EXPECT_FALSE(counter_obstruction(gates::X()).has_value());
  EXPECT_THROW(counter_obstruction(gates::S()), Error);
}

TEST(CounterObstruction, SumOfAnticommutingPair) {
  const PauliOp e = parse_pauli("XZ"), e2 = parse_pauli("ZI");
  ASSERT_TRUE(pauli_anticommute(e, e2));
  const Matrix c = (oracle::pauli_matrix(e) + oracle::pauli_matrix(e2)).scaled(RingScalar::inv_sqrt2());
  const ExactUnitary u = ExactUnitary::from_matrix(c);
  EXPECT_TRUE(is_clifford(u));
  const auto pair = counter_obstruction(u);
  ASSERT_TRUE(pair.has_value());
  const Matrix lhs = oracle::naive_mul(oracle::naive_mul(c, oracle::pauli_matrix(pair->first)), c);
  EXPECT_EQ(lhs, oracle::pauli_matrix(pair->second));
  EXPECT_TRUE(pauli_anticommute(pair->first, pair->second));
  LevelOracle lo;
  EXPECT_FALSE(lo.level_at_most(hat(u), 3));
}

TEST(CounterObstruction, ProofIdentityOnRandomGates) {
  // hat(U) E hat(U)^dagger = E (I - iU)/sqrt2 (I + E E')/sqrt2.
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 15; ++t) {
    const ExactUnitary u = random_hermitian_clifford(1 + t % 3, rng);
    const auto pair = counter_obstruction(u);
    if (!pair) continue;
    const std::size_t dim = u.dim();
    const Matrix id = Matrix::identity(dim);
    const Matrix e = oracle::pauli_matrix(pair->first), e2 = oracle::pauli_matrix(pair->second);
    const Matrix left = (id - u.matrix().scaled(RingScalar::i())).scaled(RingScalar::inv_sqrt2());
    const Matrix right = (id + oracle::naive_mul(e, e2)).scaled(RingScalar::inv_sqrt2());
    ASSERT_EQ(dense_conjugate(hat(u).matrix(), e), oracle::naive_mul(oracle::naive_mul(e, left), right));
    ++checked;
  }
  EXPECT_GE(checked, 5);
}

TEST(AnticommutingSum, ConjugationTable) {
  for (int n = 1; n <= 2; ++n) {
    std::vector<PauliOp> herm;
    for (const PauliOp& cls : enumerate_pauli_classes(n)) {
      if (cls.is_identity_class()) continue;
      const PauliOp e = hermitian_rep(n, cls.x, cls.z);
      herm.push_back(e);
      herm.push_back(negated(e));
    }
    for (const auto& e : herm) {
      for (const auto& e2 : herm) {
        if (!pauli_anticommute(e, e2)) continue;
        const Matrix c = (oracle::pauli_matrix(e) + oracle::pauli_matrix(e2)).scaled(RingScalar::inv_sqrt2());
        const Matrix ee2 = oracle::naive_mul(oracle::pauli_matrix(e), oracle::pauli_matrix(e2));
        for (const PauliOp& p : enumerate_pauli_classes(n)) {
          const Matrix pm = oracle::pauli_matrix(p);
          const bool a = pauli_anticommute(e, p), b = pauli_anticommute(e2, p);
          Matrix want = pm;
          if (!a && b) want = oracle::naive_mul(pm, ee2);
          if (a && !b) want = -oracle::naive_mul(pm, ee2);
          if (a && b) want = -pm;
          ASSERT_EQ(dense_conjugate(c, pm), want) << to_string(e) << " " << to_string(e2) << " " << to_string(p);
        }
      }
    }
  }
}

TEST(LevelOracle, Examples) {
  LevelOracle lo;
  EXPECT_FALSE(lo.level_at_most(gates::S(), 1));
  EXPECT_TRUE(lo.level_at_most(gates::S(), 2));
  EXPECT_EQ(lo.min_level(gates::X(), 4), std::optional<int>(1));
  EXPECT_EQ(lo.min_level(hat(gates::X()), 4), std::optional<int>(2));
  EXPECT_EQ(lo.min_level(gates::CCX(), 4), std::optional<int>(3));
  EXPECT_EQ(lo.min_level(t_gate(), 4), std::optional<int>(3));
  EXPECT_EQ(lo.min_level(hat(gates::CX()), 4), std::optional<int>(3));
  EXPECT_EQ(lo.min_level(gates::CSWAP(), 4), std::optional<int>(3));
  for (int k = 2; k <= 4; ++k) EXPECT_FALSE(lo.level_at_most(hat(gates::H()), k)) << k;
  EXPECT_EQ(lo.min_level(hat(gates::H()), 4), std::nullopt);
}

TEST(LevelOracle, WitnessRefutesLevel) {
  LevelOracle lo;
  ASSERT_FALSE(lo.level_at_most(hat(gates::H()), 3));
  ASSERT_TRUE(lo.witness().has_value());
  const LevelWitness w = *lo.witness();
  EXPECT_EQ(w.level, 3);
  // The witnessed conjugate must itself fail the level below.
  const Matrix conj = conjugate(hat(gates::H()).matrix(), w.pauli);
  LevelOracle fresh;
  EXPECT_FALSE(fresh.level_at_most(ExactUnitary::from_matrix(conj), 2));
  EXPECT_TRUE(lo.level_at_most(gates::CZ(), 2));
  EXPECT_FALSE(lo.witness().has_value());
}

TEST(LevelOracle, Monotone) {
  const std::vector<ExactUnitary> us{gates::S(),          gates::H(),       t_gate(),          gates::CCX(),
                                     hat(gates::CX()),    hat(gates::H()),  hat(gates::SWAP()), gates::CCZ(),
                                     controlled(t_gate(), 1)};
  LevelOracle lo;
  for (const auto& u : us) {
    for (int k = 1; k < 4; ++k) {
      if (lo.level_at_most(u, k)) {
        EXPECT_TRUE(lo.level_at_most(u, k + 1)) << k;
      }
    }
  }
}

TEST(LevelOracle, GlobalPhaseInsensitive) {
  const std::vector<RingScalar> phases{RingScalar::one(), RingScalar::from_int(-1), RingScalar::i(),
                                       -RingScalar::i(), kOmega, kOmega.conj()};
  const std::vector<ExactUnitary> us{gates::X(), gates::S(), t_gate(), gates::CCX(), hat(gates::CX()), hat(gates::H())};
  for (const auto& u : us) {
    LevelOracle ref;
    std::vector<bool> base;
    for (int k = 1; k <= 3; ++k) base.push_back(ref.level_at_most(u, k));
    for (const auto& z : phases) {
      LevelOracle lo;  // fresh memo so phased copies are decided independently
      for (int k = 1; k <= 3; ++k) ASSERT_EQ(lo.level_at_most(u.with_phase(z), k), base[k - 1]);
    }
  }
}

TEST(LevelOracle, BudgetLimits) {
  LevelOracle lo(Budget::parse("qubits=2,level=3"));
  EXPECT_THROW(lo.level_at_most(gates::CCX(), 2), Error);
  EXPECT_THROW(lo.level_at_most(gates::CX(), 4), Error);
  EXPECT_THROW(lo.level_at_most(gates::CX(), 0), Error);
  LevelOracle tiny(Budget::parse("work=3"));
  try {
    tiny.level_at_most(hat(gates::CX()), 3);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

TEST(Budget, Parse) {
  const Budget d;
  EXPECT_EQ(d.max_qubits, 5);
  EXPECT_EQ(d.max_level, 4);
  EXPECT_EQ(d.max_work, 20'000'000U);
  const Budget b = Budget::parse("work=5,qubits=3,level=2");
  EXPECT_EQ(b.max_work, 5U);
  EXPECT_EQ(b.max_qubits, 3);
  EXPECT_EQ(b.max_level, 2);
  EXPECT_EQ(Budget::parse("1000").max_work, 1000U);
  EXPECT_EQ(Budget::parse("qubits=6").max_work, d.max_work);
  for (const char* bad : {"", "abc", "work=", "work=1x", "speed=3", "work=1,,"}) {
    EXPECT_THROW(Budget::parse(bad), Error) << bad;
  }
}

TEST(Budget, FromEnvironment) {
  ::setenv("CLIMB_BUDGET", "qubits=6,level=5", 1);
  const Budget b = Budget::from_env();
  ::unsetenv("CLIMB_BUDGET");
  EXPECT_EQ(b.max_qubits, 6);
  EXPECT_EQ(b.max_level, 5);
  EXPECT_EQ(Budget::from_env().max_qubits, 5);
}

TEST(ClimbVerdict, Examples) {
  const ClimbReport cz = climb_verdict(gates::CZ());
  EXPECT_EQ(cz.verdict, Verdict::Climbs);
  EXPECT_FALSE(cz.trivial);
  ASSERT_TRUE(cz.clifford.has_value());
  EXPECT_EQ(cz.clifford->residue.dim, 2U);
  EXPECT_TRUE(cz.clifford->hyperbolic);

  const ClimbReport h = climb_verdict(gates::H());
  EXPECT_EQ(h.verdict, Verdict::BlockedNotHyperbolic);
  EXPECT_TRUE(h.obstruction.has_value());

  const ExactUnitary cx2 = embed(gates::CX(), {1, 3}, 4) * embed(gates::CX(), {2, 4}, 4);
  const ClimbReport r = climb_verdict(cx2);
  EXPECT_EQ(r.verdict, Verdict::BlockedResidueGT2);
  EXPECT_EQ(r.clifford->residue.dim, 4U);

  const ClimbReport x = climb_verdict(gates::X());
  EXPECT_EQ(x.verdict, Verdict::Climbs);
  EXPECT_TRUE(x.trivial);
  EXPECT_EQ(x.min_level, std::optional<int>(1));
}

TEST(ClimbVerdict, NonHermitianAndNonClifford) {
  const ClimbReport s = climb_verdict(gates::S());
  EXPECT_FALSE(s.hermitian);
  EXPECT_EQ(s.verdict, Verdict::Unknown);
  EXPECT_EQ(s.min_level, std::optional<int>(2));
  EXPECT_FALSE(s.note.empty());

  ClimbOptions opts;
  opts.hat_level = true;
  const ClimbReport t = climb_verdict(gates::CCX(), opts);
  EXPECT_FALSE(t.clifford.has_value());
  EXPECT_EQ(t.min_level, std::optional<int>(3));
  EXPECT_EQ(t.hat_level, std::optional<int>(4));
  EXPECT_EQ(t.verdict, Verdict::Climbs);
}

TEST(ClimbVerdict, HatLevelAgreesWithVerdict) {
  ClimbOptions opts;
  opts.hat_level = true;
  for (const auto& u : {gates::CZ(), gates::SWAP(), gates::CX(), gates::H(), gates::Z(), kron(gates::H(), gates::Z())}) {
    const ClimbReport r = climb_verdict(u, opts);
    ASSERT_TRUE(r.min_level.has_value());
    if (r.verdict == Verdict::Climbs) {
      EXPECT_EQ(r.hat_level, std::optional<int>(*r.min_level + 1));
    } else {
      EXPECT_TRUE(!r.hat_level || *r.hat_level > *r.min_level + 1);
      EXPECT_TRUE(r.hat_witness.has_value());
    }
  }
  const ClimbReport h = climb_verdict(gates::H(), opts);
  EXPECT_EQ(h.hat_level, std::nullopt);
  EXPECT_EQ(h.hat_witness->level, 3);
}

TEST(ClimbVerdict, BudgetExhaustionIsReported) {
  const ClimbReport r = climb_verdict(gates::CCX(), {}, Budget::parse("work=2"));
  EXPECT_TRUE(r.budget_exhausted);
  EXPECT_EQ(r.min_level, std::nullopt);
}

// Both characterization paths on every Hermitian diagonal and permutation
// Clifford with two or three qubits.
TEST(ClimbVerdict, AgreesWithDirectMembership) {
  std::vector<ExactUnitary> gates_under_test;
  for (std::size_t n = 2; n <= 3; ++n) {
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << (n * n)); ++t) {
      BinMatrix m(n, n);
      for (std::size_t s = 0; s < n * n; ++s) m.set(s / n, s % n, (t >> s) & 1U);
      if (m.is_symmetric() && m.has_zero_diagonal()) gates_under_test.push_back(diagonal_clifford(m));
      if (gf2_rank(m) == n && m * m == BinMatrix::identity(n)) gates_under_test.push_back(permutation_clifford(m));
    }
  }
  EXPECT_EQ(gates_under_test.size(), (2U + 4U) + (8U + 22U));
  LevelOracle lo;
  for (const auto& c : gates_under_test) {
    const ClimbReport r = climb_verdict(c, {});
    ASSERT_TRUE(r.clifford.has_value());
    const bool climbs = r.verdict == Verdict::Climbs;
    ASSERT_EQ(climbs, lo.level_at_most(hat(c), 3));
    if (!r.trivial) {
      ASSERT_EQ(climbs, r.clifford->residue.dim == 2);
    }
    ASSERT_EQ(r.trivial, r.clifford->residue.dim == 0);
  }
}

TEST(ClimbVerdict, RandomHermitianCliffordsAgree) {
  std::mt19937_64 rng(44);
  LevelOracle lo;
  for (int t = 0; t < 25; ++t) {
    const ExactUnitary c = random_hermitian_clifford(2 + t % 2, rng);
    const ClimbReport r = climb_verdict(c, {});
    ASSERT_EQ(r.verdict == Verdict::Climbs, lo.level_at_most(hat(c), 3));
    if (r.obstruction) {
      ASSERT_NE(r.verdict, Verdict::Climbs);
    }
  }
}

TEST(RandomHermitianClifford, IsHermitianClifford) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const ExactUnitary c = random_hermitian_clifford(1 + t % 4, rng);
    ASSERT_TRUE(c.is_hermitian());
    ASSERT_TRUE(is_clifford(c));
    ASSERT_TRUE((c * c).matrix().is_identity());
  }
}

TEST(ControlledNotRules, HoldForOneAndTwoControls) {
  for (int k : {1, 2}) {
    const RuleCheck r = verify_tcnot_rules(k);
    EXPECT_TRUE(r.passed) << r.failed_rule;
    EXPECT_EQ(tcnot_rules(k).size(), 2U * static_cast<std::size_t>(k) + 2U);
  }
  // The two displayed one-control identities, built independently.
  const Matrix c = hat(gates::CX()).matrix();
  const Matrix cx = gates::CX().matrix();
  EXPECT_EQ(dense_conjugate(c, oracle::pauli_matrix(parse_pauli("XI"))),
            oracle::naive_mul(oracle::naive_kron(gates::X().matrix(), gates::R().matrix()), cx));
  EXPECT_EQ(dense_conjugate(c, oracle::pauli_matrix(parse_pauli("IZ"))),
            oracle::naive_mul(oracle::naive_kron(gates::Sdg().matrix(), gates::Z().matrix()), cx));
  EXPECT_EQ(dense_conjugate(c, oracle::pauli_matrix(parse_pauli("IX"))), oracle::pauli_matrix(parse_pauli("IX")));
  EXPECT_EQ(dense_conjugate(c, oracle::pauli_matrix(parse_pauli("ZI"))), oracle::pauli_matrix(parse_pauli("ZI")));
}

TEST(ControlledNotRules, PerturbedRuleFails) {
  for (int k : {1, 2}) {
    const auto rules = tcnot_rules(k);
    const ExactUnitary u = hat(controlled(gates::X(), k));
    for (std::size_t j = 0; j < rules.size(); ++j) {
      auto bad = rules;
      bad[j].expected = -bad[j].expected;
      const RuleCheck r = check_conjugation_rules(u, bad);
      EXPECT_FALSE(r.passed);
      EXPECT_EQ(r.failed_rule, rules[j].name);
    }
  }
}

TEST(LiftControlled, Swap) {
  const LiftReport r = lift_controlled(gates::SWAP());
  EXPECT_EQ(r.n, 3);
  EXPECT_TRUE(r.controlled_in_level3);
  EXPECT_TRUE(r.hermitian);
  EXPECT_EQ(r.verdict, std::optional<Verdict>(Verdict::Climbs));
  EXPECT_EQ(r.hat_in_level4, std::optional<bool>(true));
}

TEST(LiftControlled, OrderFourAndBlockedCases) {
  const LiftReport xz = lift_controlled(gates::X() * gates::Z());
  EXPECT_TRUE(xz.controlled_in_level3);
  EXPECT_FALSE(xz.hermitian);
  EXPECT_FALSE(xz.hat_in_level4.has_value());

  const LiftReport h = lift_controlled(gates::H());
  EXPECT_TRUE(h.controlled_in_level3);
  EXPECT_EQ(h.verdict, std::optional<Verdict>(Verdict::BlockedNotHyperbolic));
  EXPECT_FALSE(h.hat_in_level4.has_value());
}

TEST(LiftControlled, Rejections) {
  auto code_of = [](const ExactUnitary& c) {
    try {
      lift_controlled(c);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  const ExactUnitary hs = gates::H() * gates::S();
  EXPECT_EQ(code_of(hs), ErrorCode::OrderNotTwoOrFour);
  EXPECT_EQ(code_of(gates::S()), ErrorCode::OrderNotTwoOrFour);
  EXPECT_EQ(code_of(t_gate()), ErrorCode::NotClifford);
  LevelOracle lo;
  EXPECT_FALSE(lo.level_at_most(controlled(hs, 1), 3));
}

}  // namespace
}  // namespace climb
