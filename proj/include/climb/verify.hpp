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

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "climb/clifford.hpp"
#include "climb/error.hpp"
#include "climb/hierarchy.hpp"
#include "climb/matrix.hpp"
#include "climb/symplectic.hpp"

namespace climb {

struct CheckResult {
  std::string tag;
  std::string description;
  bool passed = false;
  std::string detail;
  bool budget_exhausted = false;  // failed because a work or size limit was hit
};

/// <vF, v> = 0 for every v, by enumeration.
inline bool is_hyperbolic_bruteforce(const SymplecticMatrix& f) {
  const std::size_t dim = 2 * f.n();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dim); ++bits) {
    BitVec v(dim);
    for (std::size_t j = 0; j < dim; ++j) v.set(j, (bits >> j) & 1U);
    if (symplectic_inner(f.apply(v), v)) return false;
  }
  return true;
}

namespace verify_detail {

using Outcome = std::pair<bool, std::string>;
using CheckFn = std::function<Outcome()>;

inline CheckResult run(const std::string& tag, const std::string& description, const CheckFn& fn) {
  CheckResult out{tag, description, false, "", false};
  try {
    auto [ok, detail] = fn();
    out.passed = ok;
    out.detail = std::move(detail);
  } catch (const Error& e) {
    out.detail = e.what();
    out.budget_exhausted = e.code() == ErrorCode::BudgetExceeded;
  }
  return out;
}

inline std::string level_text(const std::optional<int>& k) { return k ? std::to_string(*k) : "none"; }

inline ExactUnitary place(const ExactUnitary& g, std::vector<int> qubits, int n) { return embed(g, qubits, n); }

}  // namespace verify_detail

/// Named examples: square roots, obstructions, lifts and conjugation rules,
/// restricted to gates on at most n qubits.
inline std::vector<CheckResult> verify_paper(int n, const Budget& budget) {
  using verify_detail::Outcome;
  using verify_detail::run;
  std::vector<CheckResult> out;
  const RingScalar root_i = RingScalar::from_numerator({0, 1, 0, 0}, 0);  // omega = (1+i)/sqrt2

  out.push_back(run("square-root-law", "hat(U)^2 = iU for Hermitian library gates", [&] {
    std::vector<std::pair<std::string, ExactUnitary>> gs = {
        {"X", gates::X()}, {"Y", gates::Y()}, {"Z", gates::Z()}, {"H", gates::H()}};
    if (n >= 2) {
      gs.insert(gs.end(), {{"SWAP", gates::SWAP()}, {"CZ", gates::CZ()}, {"CX", gates::CX()}});
    }
    if (n >= 3) gs.insert(gs.end(), {{"CCX", gates::CCX()}, {"CSWAP", gates::CSWAP()}});
    for (const auto& [name, g] : gs) {
      const ExactUnitary h = hat(g);
      if ((h * h).matrix() != g.matrix().scaled(RingScalar::i())) return Outcome(false, name);
    }
    return Outcome(true, std::to_string(gs.size()) + " gates");
  }));

  out.push_back(run("hadamard-obstruction", "H has obstruction (X, Z); hat(H) misses levels 2..4", [&] {
    auto ob = counter_obstruction(gates::H());
    const bool pair_ok = ob && to_string(ob->first) == "X" && to_string(ob->second) == "Z";
    LevelOracle oracle(budget);
    const ExactUnitary h = hat(gates::H());
    bool outside = true;
    for (int k = 2; k <= 4; ++k) outside = outside && !oracle.level_at_most(h, k);
    return Outcome(pair_ok && outside, pair_ok ? "pair (X, Z)" : "unexpected pair");
  }));

  out.push_back(run("pauli-root-level", "hat(X) has level 2", [&] {
    LevelOracle oracle(budget);
    const auto k = oracle.min_level(hat(gates::X()), 4);
    return Outcome(k == 2, "level " + verify_detail::level_text(k));
  }));

  if (n >= 2) {
    out.push_back(run("cnot-root-level", "hat(CX) = omega C(R) and has level 3", [&] {
      LevelOracle oracle(budget);
      const ExactUnitary h = hat(gates::CX());
      const bool form = h.matrix() == controlled(gates::R(), 1).matrix().scaled(root_i);
      const auto k = oracle.min_level(h, 4);
      return Outcome(form && k == 3, "level " + verify_detail::level_text(k));
    }));
    out.push_back(run("cnot-root-rules-k1", "conjugation rules of hat(CX)", [&] {
      const RuleCheck r = verify_tcnot_rules(1);
      return Outcome(r.passed, r.passed ? "all rules hold" : "failed " + r.failed_rule);
    }));
    out.push_back(run("swap-root-level", "hat(SWAP) has level 3", [&] {
      LevelOracle oracle(budget);
      const auto k = oracle.min_level(hat(gates::SWAP()), 4);
      return Outcome(k == 3, "level " + verify_detail::level_text(k));
    }));
    out.push_back(run("controlled-hs-rejected", "C(HS) is refused by the lift and lies outside level 3", [&] {
      const ExactUnitary hs = gates::H() * gates::S();
      bool refused = false;
      try {
        lift_controlled(hs, budget);
      } catch (const Error& e) {
        refused = e.code() == ErrorCode::OrderNotTwoOrFour;
      }
      LevelOracle oracle(budget);
      const bool outside = !oracle.level_at_most(controlled(hs, 1), 3);
      return Outcome(refused && outside, refused ? "order 6 refused" : "not refused");
    }));
  }
  if (n >= 3) {
    out.push_back(run("cnot-root-rules-k2", "conjugation rules of hat(CCX)", [&] {
      const RuleCheck r = verify_tcnot_rules(2);
      return Outcome(r.passed, r.passed ? "all rules hold" : "failed " + r.failed_rule);
    }));
    out.push_back(run("controlled-swap-lift", "CSWAP in level 3, hat(CSWAP) in level 4", [&] {
      const LiftReport r = lift_controlled(gates::SWAP(), budget);
      const bool ok = r.controlled_in_level3 && r.hat_in_level4.value_or(false);
      return Outcome(ok, ok ? "lifted" : "lift failed");
    }));
  }
  if (n >= 4) {
    out.push_back(run("cz-pair-level4", "C = CZ(1,4) CZ(2,3): residue 4, hat(C) in level 4 but not 3", [&] {
      const ExactUnitary c = embed(gates::CZ(), {1, 4}, 4) * embed(gates::CZ(), {2, 3}, 4);
      const std::size_t r = residue_space(symplectic_of(c).F).dim;
      LevelOracle oracle(budget);
      const ExactUnitary h = hat(c);
      const bool ok = r == 4 && !oracle.level_at_most(h, 3) && oracle.level_at_most(h, 4);
      return Outcome(ok, "residue dim " + std::to_string(r));
    }));
    out.push_back(run("cnot-pair-no-lift", "C = CX(1,3) CX(2,4): hat(C) not in level 3, product of roots is", [&] {
      const ExactUnitary c1 = embed(gates::CX(), {1, 3}, 4);
      const ExactUnitary c2 = embed(gates::CX(), {2, 4}, 4);
      const ClimbReport rep = climb_verdict(c1 * c2, {}, budget);
      LevelOracle oracle(budget);
      const bool ok = rep.verdict == Verdict::BlockedResidueGT2 && !oracle.level_at_most(hat(c1 * c2), 3) &&
                      oracle.level_at_most(hat(c1) * hat(c2), 3);
      return Outcome(ok, std::string("verdict ") + verdict_name(rep.verdict));
    }));
  }
  return out;
}

inline std::uint64_t diagonal_family_formula(int n) {
  const std::uint64_t p = std::uint64_t{1} << n;
  return (p - 1) * (p - 2) / 6;
}

inline std::uint64_t permutation_family_formula(int n) {
  const std::uint64_t p = std::uint64_t{1} << n;
  return (p - 1) * (p / 2 - 1);
}

/// Family sizes against the closed formulas for 2 <= m <= n.
inline std::vector<CheckResult> verify_counting(int n) {
  using verify_detail::Outcome;
  using verify_detail::run;
  std::vector<CheckResult> out;
  for (int m = 2; m <= n; ++m) {
    out.push_back(run("diagonal-count-n" + std::to_string(m), "climbing diagonal Cliffords", [m] {
      const std::size_t got = enumerate_climber_family(ClimberFamily::diagonal, m).count();
      return Outcome(got == diagonal_family_formula(m),
                            std::to_string(got) + " vs " + std::to_string(diagonal_family_formula(m)));
    }));
    out.push_back(run("permutation-count-n" + std::to_string(m), "climbing permutation Cliffords", [m] {
      const std::size_t got = enumerate_climber_family(ClimberFamily::permutation, m).count();
      return Outcome(got == permutation_family_formula(m),
                            std::to_string(got) + " vs " + std::to_string(permutation_family_formula(m)));
    }));
  }
  return out;
}

/// Symplectic layer: exhaustive over Sp(2n) for n <= 2, sampled above.
inline std::vector<CheckResult> verify_symplectic(int n, std::uint64_t seed = 7) {
  using verify_detail::Outcome;
  using verify_detail::run;
  std::vector<SymplecticMatrix> group;
  std::string scope;
  if (n <= 2) {
    group = enumerate_sp(static_cast<std::size_t>(n));
    scope = "all " + std::to_string(group.size()) + " elements";
  } else {
    std::mt19937_64 rng(seed);
    for (int j = 0; j < 200; ++j) {
      SymplecticMatrix f = random_symplectic(static_cast<std::size_t>(n), rng);
      group.push_back(f);
      // Involutions are rare in random samples; add conjugates of T_v T_w.
      BitVec v(2 * static_cast<std::size_t>(n));
      BitVec w(2 * static_cast<std::size_t>(n));
      for (std::size_t b = 0; b < v.size(); ++b) {
        v.set(b, rng() & 1U);
        w.set(b, rng() & 1U);
      }
      if (!symplectic_inner(v, w)) group.push_back(f.inverse() * transvection(v) * transvection(w) * f);
    }
    scope = std::to_string(group.size()) + " samples";
  }
  std::vector<CheckResult> out;
  out.push_back(run("hyperbolic-criterion", "Gram test agrees with the quantifier", [&] {
    for (const auto& f : group) {
      if (is_hyperbolic(f) != is_hyperbolic_bruteforce(f)) return Outcome(false, to_pretty(f));
    }
    return Outcome(true, scope);
  }));
  out.push_back(run("involution-decomposition", "transvection factors of involutions reproduce F", [&] {
    std::size_t count = 0;
    for (const auto& f : group) {
      if (!is_involution(f)) continue;
      ++count;
      const auto vs = decompose_involution(f);
      const ResidueSpace res = residue_space(f);
      if (transvection_product(vs, f.n()) != f) return Outcome(false, to_pretty(f));
      if (!vs.empty() && vs.size() != res.dim + 1) return Outcome(false, "wrong length");
      const BinMatrix basis = BinMatrix::from_rows(res.basis, 2 * f.n());
      for (const auto& v : vs) {
        if (!gf2_solve_left(basis, v)) return Outcome(false, "vector outside Res(F)");
      }
    }
    return Outcome(true, std::to_string(count) + " involutions");
  }));
  out.push_back(run("residue-isotropic", "Res(F) is isotropic for involutions", [&] {
    for (const auto& f : group) {
      if (is_involution(f) && !is_isotropic(residue_space(f).basis)) return Outcome(false, to_pretty(f));
    }
    return Outcome(true, scope);
  }));
  out.push_back(run("transvection-factorization", "every element is a product of transvections", [&] {
    for (const auto& f : group) {
      auto ws = transvection_factors(f);
      std::reverse(ws.begin(), ws.end());
      if (transvection_product(ws, f.n()) != f) return Outcome(false, to_pretty(f));
    }
    return Outcome(true, scope);
  }));
  if (n <= 3) {
    out.push_back(run("clifford-round-trip", "symplectic_of(clifford_from_symplectic(F)) = F", [&] {
      for (const auto& f : group) {
        if (symplectic_of(clifford_from_symplectic(f)).F != f) return Outcome(false, to_pretty(f));
      }
      return Outcome(true, scope);
    }));
  }
  return out;
}

inline std::vector<CheckResult> verify_suite(const std::string& suite, int n, const Budget& budget) {
  if (suite == "paper") return verify_paper(n, budget);
  if (suite == "counting") return verify_counting(n);
  if (suite == "symplectic") return verify_symplectic(n);
  throw Error(ErrorCode::ParseSyntax, "unknown suite '" + suite + "' (paper, counting, symplectic)");
}

// ---------------------------------------------------------------------------
// Experiment: levels reached by square roots of Hermitian Cliffords that
// carry no anticommuting obstruction pair.

struct SurveyRow {
  std::size_t residue_dim = 0;
  bool hyperbolic = false;
  bool obstruction_free = false;
  std::optional<int> hat_level;  // none: above the level bound or budget hit
};

/// Samples V D V^dagger with D = diagonal_clifford(A) for random symmetric
/// zero-diagonal A and random Cliffords V, plus a few with H factors.
inline std::vector<SurveyRow> survey(int n, int samples, const Budget& budget, std::uint64_t seed = 11) {
  std::mt19937_64 rng(seed);
  std::vector<SurveyRow> rows;
  const auto un = static_cast<std::size_t>(n);
  for (int s = 0; s < samples; ++s) {
    BinMatrix a(un, un);
    for (std::size_t j = 0; j < un; ++j) {
      for (std::size_t k = j + 1; k < un; ++k) {
        const bool bit = rng() & 1U;
        a.set(j, k, bit);
        a.set(k, j, bit);
      }
    }
    ExactUnitary d = diagonal_clifford(a);
    if (s % 4 == 3) d = embed(gates::H(), {1}, n) * d * embed(gates::H(), {1}, n) * embed(gates::H(), {n}, n);
    if (!d.is_hermitian()) d = diagonal_clifford(a);
    const ExactUnitary v = clifford_from_symplectic(random_symplectic(un, rng));
    const ExactUnitary c = v * d * v.adjoint();
    SurveyRow row;
    const SymplecticMatrix f = symplectic_of(c).F;
    row.hyperbolic = is_hyperbolic(f);
    row.residue_dim = residue_space(f).dim;
    row.obstruction_free = !counter_obstruction(c).has_value();
    LevelOracle oracle(budget);
    try {
      row.hat_level = oracle.min_level(hat(c), budget.max_level);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace climb
