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

// Command-line front end: catalogue, analyze, tensor, decompose, scramble,
// mq and square subcommands. Exit status 0 on success, 1 when the input
// fails validation, 2 on usage errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hadamaq/analysis.h"
#include "hadamaq/error.h"
#include "hadamaq/mq_family.h"

namespace hq = hadamaq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

bool is_usage_error(hq::Errc c) {
  switch (c) {
    case hq::Errc::kUnknownName:
    case hq::Errc::kInvalidParameter:
    case hq::Errc::kParse:
    case hq::Errc::kIndexOutOfRange:
      return true;
    default:
      return false;
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw hq::Error(hq::Errc::kParse, "cannot write " + path);
  out << text;
}

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

int run_analyze(const std::string& input, const std::string& json_path, double tol,
                int max_order, bool timings) {
  const hq::HadamardMatrix h = hq::load_matrix(input, tol);
  hq::AnalyzeOptions opt;
  opt.tol = tol;
  opt.max_order = max_order;
  opt.timings = timings;
  const hq::AnalysisReport r = hq::analyze(h, opt, input);
  const std::string text = hq::dump_deterministic(hq::report_to_json(r, timings)) + "\n";
  if (json_path.empty()) {
    std::cout << text;
  } else {
    write_text(json_path, text);
    std::printf("n=%d commutative=%s", r.n, r.commutation.commutative() ? "yes" : "no");
    if (r.group) std::printf(" group=%s", r.group->label.text().c_str());
    if (r.decomposition.decomposition) {
      std::printf(" factors=%s", join(r.decomposition.decomposition->factor_sizes).c_str());
    }
    std::printf("\n");
  }
  return r.validation.hadamard ? kExitOk : kExitInvalid;
}

int run_decompose(const std::string& input, int max_order) {
  const hq::HadamardMatrix h = hq::load_matrix(input);
  const hq::DecomposeResult res = hq::decompose(h, max_order);
  if (const auto* d = std::get_if<hq::FourierDecomposition>(&res)) {
    const hq::DecompositionCheck check = hq::verify_decomposition(h, *d);
    nlohmann::ordered_json j;
    j["factor_sizes"] = d->factor_sizes;
    j["witness"] = hq::witness_to_json(d->witness);
    j["verified"] = check.pass;
    j["residual"] = check.residual;
    std::cout << hq::dump_deterministic(j) << "\n";
    return check.pass ? kExitOk : kExitInvalid;
  }
  if (const auto* nc = std::get_if<hq::NotCommutative>(&res)) {
    std::printf("not commutative: quotient of rows %d and %d is not a row class\n",
                nc->failure.i, nc->failure.j);
    return kExitInvalid;
  }
  const auto& sf = std::get<hq::SnapFailure>(res);
  std::printf("entry (%d, %d) is not a root of unity of order <= %d\n", sf.i, sf.j, max_order);
  return kExitInvalid;
}

int run_mq(const std::string& q_text, bool check_all) {
  const hq::Phase q = hq::parse_root(q_text);
  const hq::MqCase c = hq::classify(q);
  const hq::MqGroupLabel predicted = hq::predicted_group(c);
  std::printf("q = %s\n", c.q.to_string().c_str());
  if (c.id == hq::MqCaseId::kInfinite) {
    std::printf("case: infinite\npredicted: %s\n", predicted.text().c_str());
    return kExitOk;
  }
  std::printf("n = %d  s = %d  m = %d  case: %s\n", *c.n, c.s, c.m, hq::mq_case_name(c.id));
  std::printf("predicted: %s (order %d)\n", predicted.text().c_str(), *predicted.order());

  const hq::RealizedGroup g = hq::realized_group(c);
  std::printf("generators: %s, %s%s\n", g.gens.names[0].c_str(), g.gens.names[1].c_str(),
              g.gens.q_negated ? " (q replaced by -q)" : "");
  std::printf("realized: order %zu, label %s, center %zu, scalars %zu, projective order %zu\n",
              g.fingerprint.order, g.fingerprint.label.text().c_str(),
              g.fingerprint.center_order, g.scalar_order, g.projective_order);
  std::printf("order matches prediction: %s\npresentation confirmed: %s\n",
              g.order_matches_prediction ? "yes" : "no",
              g.presentation_confirmed ? "yes" : "no");
  const auto level = hq::butson_level(hq::mq(c.q));
  std::printf("butson level (scan): %s  order of q^2: %d\n",
              level ? std::to_string(*level).c_str() : "none", *c.n);

  bool ok = g.order_matches_prediction && g.presentation_confirmed;
  if (check_all) {
    int passed = 0;
    int total = 0;
    double worst = 0.0;
    for (int k = 0; k < 2 * *c.n; ++k) {
      for (int sign : {1, -1}) {
        const hq::FactorizationCheck f = hq::factorization_check(c, k, sign);
        ++total;
        passed += f.pass ? 1 : 0;
        worst = std::max(worst, f.residual);
      }
    }
    std::printf("factorization checks: %d/%d pass, max residual %.3g\n", passed, total, worst);
    ok = ok && passed == total;
  }
  return ok ? kExitOk : kExitInvalid;
}

int run_square_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hq::Error(hq::Errc::kParse, "cannot open " + path);
  const hq::SymbolGrid grid = hq::read_msq(in);
  if (!hq::is_latin(grid)) {
    std::printf("not a magic square: rows and columns must be permutations\n");
    return kExitInvalid;
  }
  std::vector<hq::GroupElement> gens;
  for (const auto& row : grid) gens.emplace_back(hq::Permutation(row));
  const hq::GroupFingerprint f = hq::fingerprint(hq::generate(gens));
  std::printf("order %zu\nabelian %s\ncenter order %zu\nlabel %s\n", f.order,
              f.abelian ? "yes" : "no", f.center_order, f.label.text().c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum permutation group invariants of complex Hadamard matrices"};
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalogue", "List or emit built-in matrices");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "Print catalogue names");
  auto* emit = cat->add_subcommand("emit", "Write a catalogue matrix in .chm format");
  std::string emit_name;
  std::string emit_out;
  emit->add_option("name", emit_name, "e.g. fourier:6, mq:1/8, fourier:2*fourier:3")->required();
  emit->add_option("-o,--output", emit_out, "Output file (default stdout)");

  auto* an = app.add_subcommand("analyze", "Run the full analysis pipeline");
  std::string an_input;
  std::string an_json;
  double tol = hq::kDefaultTol;
  int max_order = hq::kDefaultMaxOrder;
  bool timings = false;
  an->add_option("input", an_input, ".chm file or catalogue name")->required();
  an->add_option("--json", an_json, "Write the JSON report here instead of stdout");
  an->add_option("--tol", tol, "Numerical tolerance")->check(CLI::PositiveNumber);
  an->add_option("--max-order", max_order, "Largest root-of-unity order to snap to")
      ->check(CLI::Range(1, 1 << 20));
  an->add_flag("--timings", timings, "Include per-stage timings in the report");

  auto* tn = app.add_subcommand("tensor", "Tensor product of two matrices");
  std::string tn_a;
  std::string tn_b;
  std::string tn_out;
  tn->add_option("a", tn_a)->required();
  tn->add_option("b", tn_b)->required();
  tn->add_option("-o,--output", tn_out, "Output .chm file")->required();

  auto* dc = app.add_subcommand("decompose", "Fourier tensor decomposition");
  std::string dc_input;
  int dc_order = hq::kDefaultMaxOrder;
  dc->add_option("input", dc_input)->required();
  dc->add_option("--max-order", dc_order)->check(CLI::Range(1, 1 << 20));

  auto* sc = app.add_subcommand("scramble", "Apply a random equivalence");
  std::string sc_input;
  std::string sc_out;
  std::uint64_t seed = 0;
  sc->add_option("input", sc_input)->required();
  sc->add_option("--seed", seed)->required();
  sc->add_option("-o,--output", sc_out, "Output .chm file (default stdout)");

  auto* mqc = app.add_subcommand("mq", "Group classification for the 4x4 family");
  std::string q_text;
  bool check_all = false;
  mqc->add_option("--q", q_text, "q = e^{2 pi i k/l} given as k/l")->required();
  mqc->add_flag("--check-all", check_all, "Run every projection factorization check");

  auto* sq = app.add_subcommand("square", "Magic square tools");
  sq->require_subcommand(1);
  auto* sg = sq->add_subcommand("group", "Group generated by the rows of a .msq square");
  std::string sq_path;
  sg->add_option("file", sq_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cat->parsed()) {
      if (cat->got_subcommand("list")) {
        for (const auto& name : hq::catalogue_names()) std::cout << name << "\n";
        return kExitOk;
      }
      write_text(emit_out, hq::to_chm(hq::catalogue(emit_name)));
      return kExitOk;
    }
    if (an->parsed()) return run_analyze(an_input, an_json, tol, max_order, timings);
    if (tn->parsed()) {
      write_text(tn_out, hq::to_chm(hq::tensor(hq::load_matrix(tn_a), hq::load_matrix(tn_b))));
      return kExitOk;
    }
    if (dc->parsed()) return run_decompose(dc_input, dc_order);
    if (sc->parsed()) {
      const hq::HadamardMatrix h = hq::load_matrix(sc_input);
      const hq::EquivalenceWitness w = hq::random_witness(h.size(), seed);
      write_text(sc_out, hq::to_chm(hq::apply_equivalence(h, w)));
      return kExitOk;
    }
    if (mqc->parsed()) return run_mq(q_text, check_all);
    if (sg->parsed()) return run_square_group(sq_path);
  } catch (const hq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (is_usage_error(e.code())) {
      std::cerr << app.help();
      return kExitUsage;
    }
    return kExitInvalid;
  }
  return kExitUsage;
}
