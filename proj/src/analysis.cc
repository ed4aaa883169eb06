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

#include "hadamaq/analysis.h"

#include <chrono>
#include <filesystem>
#include <fstream>

#include "hadamaq/error.h"

namespace hadamaq {

const char* decomposition_status_name(DecompositionSummary::Status s) {
  switch (s) {
    case DecompositionSummary::Status::kOk: return "ok";
    case DecompositionSummary::Status::kNotCommutative: return "not_commutative";
    case DecompositionSummary::Status::kSnapFailure: return "snap_failure";
    case DecompositionSummary::Status::kError: return "error";
  }
  return "error";
}

bool AnalysisReport::consistent() const {
  if (commutation.verdict == Commutativity::kIndeterminate) return true;
  const bool c = commutation.commutative();
  const bool d = decomposition.status == DecompositionSummary::Status::kOk;
  return c == square.has_value() && c == d;
}

namespace {

class StageTimer {
 public:
  explicit StageTimer(std::vector<std::pair<std::string, double>>& out) : out_(out) {}
  void lap(const char* stage) {
    const auto now = std::chrono::steady_clock::now();
    out_.emplace_back(stage, std::chrono::duration<double>(now - last_).count());
    last_ = now;
  }

 private:
  std::vector<std::pair<std::string, double>>& out_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void run_decompose(const HadamardMatrix& h, const AnalyzeOptions& opt, AnalysisReport& r) {
  using Status = DecompositionSummary::Status;
  DecompositionSummary& d = r.decomposition;
  const DecomposeResult result = decompose(h, opt.max_order);
  if (const auto* ok = std::get_if<FourierDecomposition>(&result)) {
    d.status = Status::kOk;
    const DecompositionCheck check = verify_decomposition(h, *ok, opt.tol);
    d.verified = check.pass;
    d.residual = check.residual;
    d.decomposition = *ok;
    if (!check.pass) r.notes.push_back("decomposition witness failed verification");
  } else if (const auto* nc = std::get_if<NotCommutative>(&result)) {
    d.status = Status::kNotCommutative;
    d.i = nc->failure.i;
    d.j = nc->failure.j;
  } else {
    const auto& sf = std::get<SnapFailure>(result);
    d.status = Status::kSnapFailure;
    d.i = sf.i;
    d.j = sf.j;
  }
}

}  // namespace

AnalysisReport analyze(const HadamardMatrix& h, const AnalyzeOptions& opt,
                       std::string descriptor) {
  AnalysisReport r;
  r.descriptor = std::move(descriptor);
  r.n = h.size();
  r.mode = h.mode();
  StageTimer timer(r.timings);

  r.validation = validate(h.entries(), opt.tol);
  timer.lap("validate");

  try {
    const DephaseResult dp = dephase(h, opt.tol);
    r.diagonal_incomplete = dp.diagonal_incomplete;
    r.dephase_witness = dp.witness;
  } catch (const Error& e) {
    r.notes.push_back(std::string("dephase: ") + e.what());
  }
  timer.lap("dephase");

  r.butson_level = butson_level(h, opt.max_order, opt.tol);
  timer.lap("butson_level");

  const ProjectionGrid grid = projection_grid(h);
  timer.lap("projection_grid");
  r.magic_unitary = validate_magic_unitary(grid, opt.tol);
  timer.lap("validate_magic_unitary");
  r.commutation = commutation_profile(grid);
  timer.lap("commutation_profile");

  if (r.commutation.commutative()) {
    auto extracted = extract_square(grid);
    if (auto* sq = std::get_if<ExtractedSquare>(&extracted)) {
      r.square = std::move(*sq);
    } else {
      const auto& f = std::get<NotCommutativeStructure>(extracted);
      r.notes.push_back("extract_square: " + f.reason);
    }
    timer.lap("extract_square");
    if (r.square) {
      try {
        const auto rows = rows_as_permutations(r.square->square);
        const std::vector<GroupElement> gens(rows.begin(), rows.end());
        r.group = fingerprint(generate(gens));
      } catch (const Error& e) {
        r.notes.push_back(std::string("group: ") + e.what());
      }
      timer.lap("group");
    }
  }

  try {
    run_decompose(h, opt, r);
  } catch (const Error& e) {
    r.decomposition.status = DecompositionSummary::Status::kError;
    r.notes.push_back(std::string("decompose: ") + e.what());
  }
  timer.lap("decompose");

  if (r.commutation.verdict == Commutativity::kIndeterminate) {
    r.notes.push_back("commutator norm in the indeterminate band");
  }
  if (!r.consistent()) {
    r.notes.push_back("commutation verdict and decomposition disagree");
  }
  return r;
}

HadamardMatrix load_matrix(const std::string& name_or_path, double tol) {
  if (std::filesystem::is_regular_file(name_or_path)) {
    std::ifstream in(name_or_path);
    if (!in) throw Error(Errc::kParse, "cannot open " + name_or_path);
    return read_chm(in, tol);
  }
  return catalogue(name_or_path);
}

}  // namespace hadamaq
