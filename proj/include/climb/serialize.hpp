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

#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "climb/circuit.hpp"
#include "climb/clifford.hpp"
#include "climb/hierarchy.hpp"
#include "climb/pauli.hpp"
#include "climb/ring.hpp"
#include "climb/symplectic.hpp"

namespace climb {

using Json = nlohmann::ordered_json;

/// Coefficient as a JSON integer when it fits, else as a decimal string.
inline Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

/// [a, b, c, d, k].
inline Json to_json(const RingScalar& x) {
  Json out = Json::array();
  for (int j = 0; j < 4; ++j) out.push_back(big_to_json(x.coeff(j)));
  out.push_back(x.sqrt2_exponent());
  return out;
}

inline Json to_json(const PauliOp& p) {
  return Json{{"x", mask_to_bits(p.n, p.x)}, {"z", mask_to_bits(p.n, p.z)}, {"c", p.c}, {"text", to_string(p)}};
}

inline Json to_json(const BinMatrix& m) { return m.to_strings(); }
inline Json to_json(const SymplecticMatrix& f) { return to_json(f.matrix()); }

inline Json to_json(const std::vector<SymplecticVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

inline Json to_json(const CliffordRep& rep) {
  Json images = Json::array();
  for (const auto& p : rep.images) images.push_back(to_string(p));
  return Json{{"F", to_json(rep.F)}, {"images", images}};
}

inline Json to_json(const PauliExpansion& ex) {
  Json terms = Json::array();
  for (const auto& t : ex.terms) {
    terms.push_back(Json{{"pauli", to_string(t.pauli)}, {"coeff", to_json(t.coeff)}, {"coeff_text", t.coeff.to_string()}});
  }
  return Json{{"kind", "pauli_expansion"},
              {"n", ex.n},
              {"residue_dim", ex.residue_dim ? Json(*ex.residue_dim) : Json(nullptr)},
              {"subgroup", ex.subgroup},
              {"terms", terms}};
}

inline Json to_json(const Budget& b) {
  return Json{{"max_qubits", b.max_qubits}, {"max_level", b.max_level}, {"max_work", b.max_work}};
}

inline Json to_json(const ClimbReport& r) {
  Json clifford = nullptr;
  Json evidence = Json::object();
  if (r.clifford) {
    const auto& c = *r.clifford;
    clifford = Json{{"F", to_json(c.rep.F)},
                    {"images", to_json(c.rep)["images"]},
                    {"hyperbolic", c.hyperbolic},
                    {"involution", c.involution},
                    {"residue_dim", c.residue.dim}};
    evidence["residue_basis"] = to_json(c.residue.basis);
  }
  evidence["obstruction"] =
      r.obstruction ? Json::array({to_json(r.obstruction->first), to_json(r.obstruction->second)}) : Json(nullptr);
  evidence["hat_witness"] =
      r.hat_witness ? Json{{"level", r.hat_witness->level}, {"pauli", to_json(r.hat_witness->pauli)}} : Json(nullptr);
  Json budget = to_json(r.budget);
  budget["exhausted"] = r.budget_exhausted;
  return Json{{"kind", "climb_report"},
              {"input", r.input},
              {"n", r.n},
              {"hermitian", r.hermitian},
              {"min_level", r.min_level ? Json(*r.min_level) : Json(nullptr)},
              {"clifford", clifford},
              {"verdict", verdict_name(r.verdict)},
              {"trivial", r.trivial},
              {"evidence", evidence},
              {"hat_level", r.hat_level ? Json(*r.hat_level) : Json(nullptr)},
              {"budget", budget},
              {"note", r.note}};
}

}  // namespace climb
