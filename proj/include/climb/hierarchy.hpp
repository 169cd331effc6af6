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
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "climb/clifford.hpp"
#include "climb/error.hpp"
#include "climb/matrix.hpp"
#include "climb/pauli.hpp"
#include "climb/symplectic.hpp"

namespace climb {

/// Limits for dense membership checks. One work unit is one dense product
/// or one Pauli-image test.
struct Budget {
  int max_qubits = 5;
  int max_level = 4;
  std::uint64_t max_work = 20'000'000;

  /// Reads CLIMB_BUDGET, either "work=N,qubits=N,level=K" (any subset) or a
  /// bare work limit.
  static Budget from_env() {
    const char* raw = std::getenv("CLIMB_BUDGET");
    return raw == nullptr ? Budget{} : parse(raw);
  }

  static Budget parse(const std::string& text) {
    Budget b;
    auto to_number = [&](const std::string& s) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size() || s.empty()) throw Error(ErrorCode::ParseSyntax, "bad CLIMB_BUDGET value '" + s + "'");
      return v;
    };
    if (text.find('=') == std::string::npos) {
      b.max_work = to_number(text);
      return b;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string item = text.substr(start, end - start);
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::ParseSyntax, "bad CLIMB_BUDGET entry '" + item + "'");
      const std::string key = item.substr(0, eq);
      const auto value = to_number(item.substr(eq + 1));
      if (key == "work") {
        b.max_work = value;
      } else if (key == "qubits") {
        b.max_qubits = static_cast<int>(value);
      } else if (key == "level") {
        b.max_level = static_cast<int>(value);
      } else {
        throw Error(ErrorCode::ParseSyntax, "unknown CLIMB_BUDGET key '" + key + "'");
      }
      start = end + 1;
    }
    return b;
  }
};

/// (I + iU) / sqrt2 for Hermitian U; squares to iU.
inline ExactUnitary hat(const ExactUnitary& u) {
  if (!u.is_hermitian()) throw Error(ErrorCode::NotHermitian, "hat needs a Hermitian unitary");
  Matrix m = u.matrix().scaled(RingScalar::i());
  for (std::size_t j = 0; j < m.dim(); ++j) m(j, j) += RingScalar::one();
  return ExactUnitary::trusted(m.scaled(RingScalar::inv_sqrt2()));
}

/// The Pauli whose conjugate left the target level first.
struct LevelWitness {
  int level = 0;  // the level that was refuted
  PauliOp pauli;  // U P U^dagger is outside level - 1
};

/// Decides membership in the Clifford hierarchy modulo global phase, under
/// the nested definition: U is in level k iff U P U^dagger is in level k-1
/// for every Pauli P.
class LevelOracle {
 public:
  explicit LevelOracle(Budget budget = Budget::from_env()) : budget_(budget) {}

  const Budget& budget() const noexcept { return budget_; }
  std::uint64_t work() const noexcept { return work_; }
  const std::optional<LevelWitness>& witness() const noexcept { return witness_; }

  bool level_at_most(const ExactUnitary& u, int k) {
    if (k < 1) throw Error(ErrorCode::Dimension, "levels start at 1");
    if (u.qubits() > budget_.max_qubits) {
      throw Error(ErrorCode::BudgetExceeded, std::to_string(u.qubits()) + " qubits exceed the budget");
    }
    if (k > budget_.max_level) throw Error(ErrorCode::BudgetExceeded, "level " + std::to_string(k) + " exceeds the budget");
    witness_.reset();
    if (k == 1) return in_level(u.matrix(), 1, true);
    // Sweep the top level even on a memo hit so a refutation carries a witness.
    const bool result = sweep(u.matrix(), k, true);
    if (k >= 3) memo_.insert_or_assign(std::to_string(k) + "|" + u.matrix().phase_canonical_key(), result);
    return result;
  }

  std::optional<int> min_level(const ExactUnitary& u, int k_max) {
    for (int k = 1; k <= k_max; ++k) {
      if (level_at_most(u, k)) return k;
    }
    return std::nullopt;
  }

  void clear_memo() { memo_.clear(); }

 private:
  void charge(std::uint64_t units = 1) {
    work_ += units;
    if (work_ > budget_.max_work) throw Error(ErrorCode::BudgetExceeded, "work budget exhausted");
  }

  bool in_level(const Matrix& u, int k, bool top) {
    if (k == 1) {
      charge();
      return detect_pauli_up_to_phase(u).has_value();
    }
    std::string key;
    if (k >= 3) {
      key = std::to_string(k) + "|" + u.phase_canonical_key();
      if (auto hit = memo_.find(key); hit != memo_.end()) return hit->second;
    }
    const bool result = sweep(u, k, top);
    if (k >= 3) memo_.emplace(std::move(key), result);
    return result;
  }

  bool sweep(const Matrix& u, int k, bool top) {
    const int n = qubits_for_dim(u.dim());
    // Paulis and Cliffords are groups, so their generators suffice below
    // level 4; level 3 is not closed under products and needs every class.
    std::vector<PauliOp> probes;
    if (k <= 3) {
      probes = pauli_generators(n);
    } else {
      for (const PauliOp& p : enumerate_pauli_classes(n)) {
        if (!p.is_identity_class()) probes.push_back(p);
      }
    }
    const Matrix u_dag = k > 2 ? u.adjoint() : Matrix{};
    for (const PauliOp& p : probes) {
      bool ok = false;
      charge();
      if (k == 2) {
        ok = conjugated_pauli(u, p).has_value();
      } else {
        ok = in_level(right_mul_pauli(u, p) * u_dag, k - 1, false);
      }
      if (!ok) {
        if (top) witness_ = LevelWitness{k, p};
        return false;
      }
    }
    return true;
  }

  Budget budget_;
  std::uint64_t work_ = 0;
  std::optional<LevelWitness> witness_;
  std::unordered_map<std::string, bool> memo_;
};

/// Hermitian E, E' with U E U = E' (a signed Hermitian Pauli) and E, E'
/// anticommuting, scanning classes in enumeration order.
inline std::optional<std::pair<PauliOp, PauliOp>> counter_obstruction(const ExactUnitary& u) {
  if (!u.is_hermitian()) throw Error(ErrorCode::NotHermitian, "obstruction search needs a Hermitian unitary");
  for (const PauliOp& cls : enumerate_pauli_classes(u.qubits())) {
    if (cls.is_identity_class()) continue;
    const PauliOp e = hermitian_rep(cls.n, cls.x, cls.z);
    auto image = conjugated_pauli(u.matrix(), e);
    if (!image) continue;
    PauliOp signed_image = image->pauli;
    if (image->phase == RingScalar::from_int(-1)) {
      signed_image = negated(signed_image);
    } else if (image->phase != RingScalar::one()) {
      continue;
    }
    if (pauli_anticommute(e, signed_image)) return std::make_pair(e, signed_image);
  }
  return std::nullopt;
}

enum class Verdict { Climbs, BlockedNotHyperbolic, BlockedResidueGT2, BlockedObstructionPair, Unknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Climbs: return "Climbs";
    case Verdict::BlockedNotHyperbolic: return "BlockedNotHyperbolic";
    case Verdict::BlockedResidueGT2: return "BlockedResidueGT2";
    case Verdict::BlockedObstructionPair: return "BlockedObstructionPair";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

struct CliffordData {
  CliffordRep rep;
  bool hyperbolic = false;
  bool involution = false;
  ResidueSpace residue;
};

struct ClimbReport {
  std::string input;
  int n = 0;
  bool hermitian = false;
  std::optional<int> min_level;
  std::optional<CliffordData> clifford;
  Verdict verdict = Verdict::Unknown;
  bool trivial = false;  // C is a Pauli up to phase (residue dimension 0)
  std::optional<std::pair<PauliOp, PauliOp>> obstruction;
  std::optional<int> hat_level;
  std::optional<LevelWitness> hat_witness;  // why hat(C) missed the level above C
  bool budget_exhausted = false;
  Budget budget;
  std::string note;
};

struct ClimbOptions {
  int max_level = 4;
  bool hat_level = false;  // also search the level of hat(C) directly
};

inline ClimbReport climb_verdict(const ExactUnitary& c, const ClimbOptions& opts = {}, Budget budget = Budget::from_env(),
                                 std::string input = "") {
  ClimbReport rep;
  rep.input = std::move(input);
  rep.n = c.qubits();
  rep.budget = budget;
  rep.hermitian = c.is_hermitian();
  LevelOracle oracle(budget);
  try {
    rep.min_level = oracle.min_level(c, opts.max_level);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    rep.budget_exhausted = true;
  }
  if (!rep.hermitian) {
    rep.note = "not Hermitian: the square root (I+iU)/sqrt2 is not unitary";
    return rep;
  }

  if (is_clifford(c)) {
    CliffordData data;
    data.rep = symplectic_of(c);
    data.hyperbolic = is_hyperbolic(data.rep.F);
    data.involution = is_involution(data.rep.F);
    data.residue = residue_space(data.rep.F);
    rep.obstruction = counter_obstruction(c);
    if (!data.hyperbolic) {
      rep.verdict = Verdict::BlockedNotHyperbolic;
    } else if (data.residue.dim == 0) {
      rep.verdict = Verdict::Climbs;
      rep.trivial = true;
    } else if (data.residue.dim == 2) {
      rep.verdict = Verdict::Climbs;
    } else {
      rep.verdict = Verdict::BlockedResidueGT2;
    }
    rep.clifford = std::move(data);
  } else {
    rep.obstruction = counter_obstruction(c);
    rep.verdict = rep.obstruction ? Verdict::BlockedObstructionPair : Verdict::Unknown;
  }

  if (opts.hat_level) {
    const ExactUnitary h = hat(c);
    try {
      rep.hat_level = oracle.min_level(h, opts.max_level);
      if (rep.min_level && *rep.min_level < opts.max_level && rep.hat_level != *rep.min_level + 1) {
        oracle.level_at_most(h, *rep.min_level + 1);
        rep.hat_witness = oracle.witness();
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      rep.budget_exhausted = true;
    }
    if (!rep.clifford && rep.verdict == Verdict::Unknown && rep.min_level && rep.hat_level) {
      rep.verdict = *rep.hat_level == *rep.min_level + 1 ? Verdict::Climbs : Verdict::Unknown;
      rep.note = "non-Clifford input: verdict from direct level search only";
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Conjugation rules.

/// U P U^dagger == expected, as an exact identity.
struct ConjugationRule {
  std::string name;
  PauliOp pauli;
  Matrix expected;
};

struct RuleCheck {
  bool passed = true;
  std::string failed_rule;
};

inline RuleCheck check_conjugation_rules(const ExactUnitary& u, const std::vector<ConjugationRule>& rules) {
  for (const auto& rule : rules) {
    if (conjugate(u.matrix(), rule.pauli) != rule.expected) return {false, rule.name};
  }
  return {};
}

/// Conjugation rules for the square root of C^(k)(X) on k+1 qubits (targets
/// the last qubit). With R = H S^dagger H:
///   X_i -> SWAP_{1i} (X (x) C^(k-1)(R) . C) SWAP_{1i}   for controls i
///   X_{k+1}, Z_i fixed for controls i
///   Z_{k+1} -> (C^(k-1)(S^dagger) (x) Z) . C
inline std::vector<ConjugationRule> tcnot_rules(int k) {
  if (k < 1) throw Error(ErrorCode::Dimension, "k must be at least 1");
  const int n = k + 1;
  const ExactUnitary c = controlled(gates::X(), k);
  const Matrix x_rule = (kron(gates::X(), controlled(gates::R(), k - 1)) * c).matrix();
  const Matrix z_rule = (kron(controlled(gates::Sdg(), k - 1), gates::Z()) * c).matrix();
  std::vector<ConjugationRule> rules;
  for (int i = 1; i <= k; ++i) {
    const ExactUnitary sw = gates::swap_qubits(n, 1, i);
    rules.push_back({"X" + std::to_string(i), PauliOp::x_on(n, i), sw.matrix() * x_rule * sw.matrix()});
  }
  rules.push_back({"X" + std::to_string(n) + " fixed", PauliOp::x_on(n, n), pauli_to_matrix(PauliOp::x_on(n, n)).matrix()});
  for (int i = 1; i <= k; ++i) {
    rules.push_back({"Z" + std::to_string(i) + " fixed", PauliOp::z_on(n, i), pauli_to_matrix(PauliOp::z_on(n, i)).matrix()});
  }
  rules.push_back({"Z" + std::to_string(n), PauliOp::z_on(n, n), z_rule});
  return rules;
}

inline RuleCheck verify_tcnot_rules(int k) {
  return check_conjugation_rules(hat(controlled(gates::X(), k)), tcnot_rules(k));
}

// ---------------------------------------------------------------------------
// Controlled lifting.

struct LiftReport {
  int n = 0;                  // qubits of controlled(C)
  bool controlled_in_level3 = false;
  bool hermitian = false;
  std::optional<Verdict> verdict;      // climb verdict of C when Hermitian
  std::optional<bool> hat_in_level4;   // checked when C is Hermitian and climbs
};

/// For a Clifford C with C^2 = +-I: controlled(C) lies in level 3, and if C
/// is Hermitian with a climbing square root then hat(controlled(C)) lies in
/// level 4. Both facts are checked directly.
inline LiftReport lift_controlled(const ExactUnitary& c, Budget budget = Budget::from_env()) {
  symplectic_of(c);  // throws NotClifford
  const Matrix sq = (c * c).matrix();
  const Matrix id = Matrix::identity(c.dim());
  if (sq != id && sq != -id) throw Error(ErrorCode::OrderNotTwoOrFour, "C^2 is not +-I");
  LiftReport rep;
  const ExactUnitary u = controlled(c, 1);
  rep.n = u.qubits();
  LevelOracle oracle(budget);
  rep.controlled_in_level3 = oracle.level_at_most(u, 3);
  rep.hermitian = c.is_hermitian();
  if (rep.hermitian) {
    ClimbOptions opts;
    opts.max_level = 2;
    rep.verdict = climb_verdict(c, opts, budget).verdict;
    if (*rep.verdict == Verdict::Climbs) rep.hat_in_level4 = oracle.level_at_most(hat(u), 4);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Random Hermitian Cliffords: V D V^dagger for a random Clifford V and D a
// Hermitian Pauli, CZ, SWAP or H placed on random qubits.

template <typename Rng>
ExactUnitary random_hermitian_clifford(int n, Rng& rng) {
  std::uniform_int_distribution<int> kind_dist(0, n >= 2 ? 3 : 1);
  std::uniform_int_distribution<int> qubit(1, n);
  ExactUnitary d = ExactUnitary::identity(n);
  const int kind = kind_dist(rng);
  if (kind == 0) {
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
    d = pauli_to_matrix(hermitian_rep(n, mask(rng), mask(rng)));
  } else if (kind == 1) {
    d = embed(gates::H(), {qubit(rng)}, n);
  } else {
    const int a = qubit(rng);
    int b = qubit(rng);
    while (b == a) b = qubit(rng);
    d = embed(kind == 2 ? gates::CZ() : gates::SWAP(), {a, b}, n);
  }
  const ExactUnitary v = clifford_from_symplectic(random_symplectic(static_cast<std::size_t>(n), rng));
  return v * d * v.adjoint();
}

}  // namespace climb
