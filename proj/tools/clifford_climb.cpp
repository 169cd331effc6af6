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

// Command-line front end: analyze, verify, enumerate, expand, decompose and
// survey. Exit codes: 0 ok, 1 input error, 2 budget exhausted, 3 failed check.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "climb/climb.hpp"

namespace {

using namespace climb;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitFailed = 3;

std::string level_text(const std::optional<int>& k, int bound) {
  return k ? std::to_string(*k) : "none (above " + std::to_string(bound) + ")";
}

std::string indent(const std::string& block, const std::string& pad) {
  std::istringstream in(block);
  std::ostringstream out;
  for (std::string line; std::getline(in, line);) out << pad << line << "\n";
  return out.str();
}

struct AnalyzeArgs {
  std::string file;
  bool hat = false;
  int max_level = 4;
  bool json = false;
};

int cmd_analyze(const AnalyzeArgs& args, const Budget& budget) {
  const ExactUnitary u = evaluate(parse_circuit_file(args.file), budget);
  if (args.hat && !u.is_hermitian()) throw Error(ErrorCode::NotHermitian, "--hat needs a Hermitian circuit");
  ClimbOptions opts;
  opts.max_level = args.max_level;
  opts.hat_level = args.hat;
  const ClimbReport rep = climb_verdict(u, opts, budget, args.file);
  if (args.json) {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << "input:       " << rep.input << "\n"
              << "qubits:      " << rep.n << "\n"
              << "hermitian:   " << (rep.hermitian ? "yes" : "no") << "\n"
              << "min level:   " << level_text(rep.min_level, args.max_level) << "\n";
    if (rep.clifford) {
      const auto& c = *rep.clifford;
      std::cout << "F_C:\n" << indent(to_pretty(c.rep.F), "  ");
      std::cout << "images:     ";
      for (const auto& p : c.rep.images) std::cout << " " << to_string(p);
      std::cout << "\nhyperbolic:  " << (c.hyperbolic ? "yes" : "no") << "\n"
                << "residue dim: " << c.residue.dim << "\n";
    }
    if (rep.hermitian) {
      std::cout << "verdict:     " << verdict_name(rep.verdict) << (rep.trivial ? " (trivial: Pauli input)" : "") << "\n";
    }
    if (rep.obstruction) {
      std::cout << "obstruction: (" << to_string(rep.obstruction->first) << ", " << to_string(rep.obstruction->second)
                << ")\n";
    }
    if (args.hat) std::cout << "hat level:   " << level_text(rep.hat_level, args.max_level) << "\n";
    if (rep.hat_witness) {
      std::cout << "hat witness: conjugate of " << to_string(rep.hat_witness->pauli) << " leaves level "
                << rep.hat_witness->level - 1 << "\n";
    }
    if (!rep.note.empty()) std::cout << "note:        " << rep.note << "\n";
    if (rep.budget_exhausted) std::cout << "budget:      exhausted\n";
  }
  return rep.budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_verify(const std::string& suite, int n, bool json, const Budget& budget) {
  const auto results = verify_suite(suite, n, budget);
  bool all = true, refuted = false;
  for (const auto& r : results) {
    all = all && r.passed;
    refuted = refuted || (!r.passed && !r.budget_exhausted);
  }
  if (json) {
    Json checks = Json::array();
    for (const auto& r : results) {
      checks.push_back(Json{{"tag", r.tag},
                            {"description", r.description},
                            {"passed", r.passed},
                            {"detail", r.detail},
                            {"budget_exhausted", r.budget_exhausted}});
    }
    std::cout << Json{{"kind", "verify"}, {"suite", suite}, {"n", n}, {"passed", all}, {"checks", checks}}.dump(2)
              << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.tag << ": " << r.description << " [" << r.detail << "]\n";
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  }
  if (all) return kExitOk;
  return refuted ? kExitFailed : kExitBudget;
}

int cmd_enumerate(const std::string& family_name, int n, bool check, bool json, const Budget& budget) {
  ClimberFamily family;
  if (family_name == "diagonal") {
    family = ClimberFamily::diagonal;
  } else if (family_name == "permutation") {
    family = ClimberFamily::permutation;
  } else {
    throw Error(ErrorCode::ParseSyntax, "unknown family '" + family_name + "'");
  }
  const FamilyEnumeration fam = enumerate_climber_family(family, n);
  const std::uint64_t formula =
      family == ClimberFamily::diagonal ? diagonal_family_formula(n) : permutation_family_formula(n);
  bool all = fam.count() == formula;
  Json members = Json::array();
  for (std::size_t j = 0; j < fam.count(); ++j) {
    Json m{{"parameter", to_json(fam.parameters[j])}};
    if (check) {
      const ExactUnitary c = fam.gate(j);
      LevelOracle oracle(budget);
      const Verdict v = climb_verdict(c, {2, false}, budget).verdict;
      const bool direct = oracle.level_at_most(hat(c), 3);
      const bool ok = v == Verdict::Climbs && direct && c.is_hermitian();
      all = all && ok;
      m["verdict"] = verdict_name(v);
      m["hat_in_level3"] = direct;
    }
    members.push_back(std::move(m));
  }
  if (json) {
    Json out{{"kind", "enumerate"}, {"family", family_name}, {"n", n}, {"count", fam.count()},
             {"formula", formula},  {"verified", check},     {"passed", all}, {"members", members}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t j = 0; j < fam.count(); ++j) {
      std::cout << "#" << j + 1 << " " << (family == ClimberFamily::diagonal ? "A" : "B") << " =";
      for (const auto& row : fam.parameters[j].to_strings()) std::cout << " " << row;
      if (check) std::cout << "  " << members[j]["verdict"].get<std::string>();
      std::cout << "\n";
    }
    std::cout << "count " << fam.count() << ", formula " << formula << (all ? "" : "  MISMATCH") << "\n";
  }
  return all ? kExitOk : kExitFailed;
}

int cmd_expand(const std::string& file, bool json, const Budget& budget) {
  const PauliExpansion ex = pauli_expand(evaluate(parse_circuit_file(file), budget));
  if (json) {
    std::cout << to_json(ex).dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& t : ex.terms) std::cout << to_string(t.pauli) << "  " << t.coeff << "\n";
  std::cout << ex.terms.size() << " terms";
  if (ex.residue_dim) std::cout << ", residue dim " << *ex.residue_dim;
  std::cout << ", support " << (ex.subgroup ? "is" : "is not") << " a subgroup\n";
  return kExitOk;
}

int cmd_decompose(const std::string& file, bool json, const Budget& budget) {
  const ExactUnitary u = evaluate(parse_circuit_file(file), budget);
  const CliffordRep rep = symplectic_of(u);
  const bool involution = is_involution(rep.F);
  const auto vectors = involution ? decompose_involution(rep.F) : transvection_factors(rep.F);
  if (json) {
    Json out{{"kind", "decompose"},       {"input", file},
             {"n", rep.n},                {"F", to_json(rep.F)},
             {"involution", involution},  {"hyperbolic", is_hyperbolic(rep.F)},
             {"residue_dim", residue_space(rep.F).dim},
             {"method", involution ? "involution" : "general"},
             {"transvections", to_json(vectors)}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "F_C:\n" << indent(to_pretty(rep.F), "  ");
  std::cout << (involution ? "involution, F = T_v1 ... T_vm with\n" : "F = T_wm ... T_w1 with\n");
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    std::cout << "  " << (involution ? "v" : "w") << j + 1 << " = " << vectors[j].to_string() << "\n";
  }
  return kExitOk;
}

int cmd_survey(int n, int samples, std::uint64_t seed, bool json, const Budget& budget) {
  const auto rows = survey(n, samples, budget, seed);
  // (residue dim, hyperbolic, obstruction-free) -> hat level -> count
  std::map<std::tuple<std::size_t, bool, bool>, std::map<int, int>> table;
  for (const auto& r : rows) ++table[{r.residue_dim, r.hyperbolic, r.obstruction_free}][r.hat_level.value_or(0)];
  if (json) {
    Json groups = Json::array();
    for (const auto& [key, levels] : table) {
      Json hist = Json::object();
      for (const auto& [lvl, count] : levels) hist[lvl == 0 ? "none" : std::to_string(lvl)] = count;
      groups.push_back(Json{{"residue_dim", std::get<0>(key)},
                            {"hyperbolic", std::get<1>(key)},
                            {"obstruction_free", std::get<2>(key)},
                            {"hat_levels", hist}});
    }
    std::cout << Json{{"kind", "survey"}, {"n", n}, {"samples", samples}, {"seed", seed}, {"groups", groups}}.dump(2)
              << "\n";
    return kExitOk;
  }
  std::cout << "residue  hyperbolic  obstruction-free  hat levels\n";
  for (const auto& [key, levels] : table) {
    std::cout << "  " << std::get<0>(key) << "      " << (std::get<1>(key) ? "yes" : "no ") << "         "
              << (std::get<2>(key) ? "yes" : "no ") << "              ";
    for (const auto& [lvl, count] : levels) std::cout << (lvl == 0 ? "none" : std::to_string(lvl)) << ":" << count << " ";
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clifford-hierarchy levels and square-root climbing"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Hierarchy level and climb verdict of a circuit");
  an->add_option("file", analyze.file, "circuit file")->required();
  an->add_flag("--hat", analyze.hat, "also search the level of (I+iU)/sqrt2 directly");
  an->add_option("--max-level", analyze.max_level, "highest level searched")->check(CLI::Range(1, 6));
  an->add_flag("--json", analyze.json, "JSON report");

  std::string suite;
  int verify_n = 2;
  bool verify_json = false;
  auto* ve = app.add_subcommand("verify", "Run a built-in check suite");
  ve->add_option("--suite", suite, "paper | counting | symplectic")->required();
  ve->add_option("-n", verify_n, "size parameter")->check(CLI::Range(1, 6));
  ve->add_flag("--json", verify_json, "JSON summary");

  std::string family;
  int enum_n = 2;
  bool enum_verify = false;
  bool enum_json = false;
  auto* en = app.add_subcommand("enumerate", "List the climbing diagonal or permutation Cliffords");
  en->add_option("--family", family, "diagonal | permutation")->required();
  en->add_option("-n", enum_n, "qubits")->required()->check(CLI::Range(1, 6));
  en->add_flag("--verify", enum_verify, "check each member's verdict and square-root level");
  en->add_flag("--json", enum_json, "JSON output");

  std::string expand_file;
  bool expand_json = false;
  auto* ex = app.add_subcommand("expand", "Pauli expansion with exact coefficients");
  ex->add_option("file", expand_file, "circuit file")->required();
  ex->add_flag("--json", expand_json, "JSON output");

  std::string decompose_file;
  bool decompose_json = false;
  auto* de = app.add_subcommand("decompose", "Transvection factors of a Clifford's symplectic matrix");
  de->add_option("file", decompose_file, "circuit file")->required();
  de->add_flag("--json", decompose_json, "JSON output");

  int survey_n = 3;
  int survey_samples = 20;
  std::uint64_t survey_seed = 11;
  bool survey_json = false;
  auto* su = app.add_subcommand("survey", "Square-root levels of sampled Hermitian Cliffords");
  su->add_option("-n", survey_n, "qubits")->check(CLI::Range(1, 5));
  su->add_option("--samples", survey_samples, "sample count")->check(CLI::PositiveNumber);
  su->add_option("--seed", survey_seed, "random seed");
  su->add_flag("--json", survey_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const Budget budget = Budget::from_env();
    if (an->parsed()) return cmd_analyze(analyze, budget);
    if (ve->parsed()) return cmd_verify(suite, verify_n, verify_json, budget);
    if (en->parsed()) return cmd_enumerate(family, enum_n, enum_verify, enum_json, budget);
    if (ex->parsed()) return cmd_expand(expand_file, expand_json, budget);
    if (de->parsed()) return cmd_decompose(decompose_file, decompose_json, budget);
    if (su->parsed()) return cmd_survey(survey_n, survey_samples, survey_seed, survey_json, budget);
  } catch (const climb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitInput;
  }
  return kExitInput;
}
