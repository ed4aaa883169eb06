// Copyright 2026 The hadamaq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>

#include "hadamaq/analysis.h"

namespace hadamaq {

using nlohmann::ordered_json;

namespace {

ordered_json phase_to_json(const Phase& p) {
  if (p.is_exact()) {
    return ordered_json::array({p.numerator(), p.order()});
  }
  const auto z = p.value();
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

ordered_json phases_to_json(const std::vector<Phase>& v) {
  ordered_json out = ordered_json::array();
  for (const Phase& p : v) out.push_back(phase_to_json(p));
  return out;
}

const char* mode_name(Mode m) { return m == Mode::kExact ? "exact" : "approx"; }

void write_number(std::string& out, double x) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

void write_value(std::string& out, const ordered_json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += ordered_json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write_value(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& v : j) flat = flat && v.is_primitive();
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += flat || indent < 0 ? (indent < 0 ? "," : ", ") : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write_value(out, v, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case ordered_json::value_t::number_float:
      write_number(out, j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_deterministic(const ordered_json& j, int indent) {
  std::string out;
  write_value(out, j, indent, 0);
  return out;
}

ordered_json witness_to_json(const EquivalenceWitness& w) {
  return ordered_json{{"row_perm", w.row_perm},
                      {"col_perm", w.col_perm},
                      {"row_phases", phases_to_json(w.row_phases)},
                      {"col_phases", phases_to_json(w.col_phases)}};
}

ordered_json fingerprint_to_json(const GroupFingerprint& f) {
  return ordered_json{{"order", f.order},
                      {"abelian", f.abelian},
                      {"center_order", f.center_order},
                      {"element_orders", f.element_orders},
                      {"label", f.label.text()}};
}

ordered_json report_to_json(const AnalysisReport& r, bool with_timings) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["input"] = {{"descriptor", r.descriptor}, {"n", r.n}, {"mode", mode_name(r.mode)}};
  j["hadamard"] = {{"valid", r.validation.hadamard},
                   {"unit_modulus", r.validation.unit_modulus},
                   {"row_residual", r.validation.row_residual},
                   {"col_residual", r.validation.col_residual}};
  j["butson_level"] = r.butson_level ? ordered_json(*r.butson_level) : ordered_json();
  j["dephase"] = {{"diagonal_complete", !r.diagonal_incomplete},
                  {"witness", witness_to_json(r.dephase_witness)}};
  j["magic_unitary"] = {{"magic", r.magic_unitary.magic},
                        {"rank_one", r.magic_unitary.rank_one},
                        {"max_projection_residual", r.magic_unitary.max_projection_residual},
                        {"max_sum_residual", r.magic_unitary.max_sum_residual}};
  j["commutation"] = {{"max_norm", r.commutation.max_norm},
                      {"verdict", commutativity_name(r.commutation.verdict)},
                      {"commutative", r.commutation.commutative()}};
  if (r.square) {
    j["magic_square"] = {{"rows", r.square->square.grid()}, {"adjusted", r.square->adjusted}};
  } else {
    j["magic_square"] = nullptr;
  }
  j["group"] = r.group ? fingerprint_to_json(*r.group) : ordered_json();

  const DecompositionSummary& d = r.decomposition;
  ordered_json dj;
  dj["status"] = decomposition_status_name(d.status);
  if (d.decomposition) {
    dj["factor_sizes"] = d.decomposition->factor_sizes;
    dj["witness"] = witness_to_json(d.decomposition->witness);
    dj["verified"] = d.verified;
    dj["residual"] = d.residual;
  } else if (d.i >= 0) {
    dj["i"] = d.i;
    dj["j"] = d.j;
  }
  j["decomposition"] = dj;
  j["consistent"] = r.consistent();
  j["notes"] = r.notes;
  if (with_timings) {
    ordered_json t = ordered_json::object();
    for (const auto& [stage, secs] : r.timings) t[stage] = secs;
    j["timings"] = t;
  }
  return j;
}

}  // namespace hadamaq
