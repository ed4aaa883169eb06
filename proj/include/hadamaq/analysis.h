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

#ifndef HADAMAQ_ANALYSIS_H
#define HADAMAQ_ANALYSIS_H

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hadamaq/fourier_decomp.h"
#include "hadamaq/hadamard.h"
#include "hadamaq/magic_square.h"
#include "hadamaq/magic_unitary.h"
#include "hadamaq/perm_group.h"

namespace hadamaq {

struct AnalyzeOptions {
  double tol = kDefaultTol;
  int max_order = kDefaultMaxOrder;
  bool timings = false;
};

struct DecompositionSummary {
  enum class Status { kOk, kNotCommutative, kSnapFailure, kError };
  Status status = Status::kError;
  std::optional<FourierDecomposition> decomposition;
  double residual = 0.0;
  bool verified = false;
  // Offending row pair or entry for the two failure statuses.
  int i = -1;
  int j = -1;
};

const char* decomposition_status_name(DecompositionSummary::Status s);

/// Everything analyze() learns about one matrix. Optional parts are absent
/// when the pipeline stopped before reaching them.
struct AnalysisReport {
  std::string descriptor;
  int n = 0;
  Mode mode = Mode::kExact;
  ValidationReport validation;
  std::optional<int> butson_level;
  bool diagonal_incomplete = false;
  EquivalenceWitness dephase_witness;
  MagicUnitaryReport magic_unitary;
  CommutationProfile commutation;
  std::optional<ExtractedSquare> square;
  std::optional<GroupFingerprint> group;
  DecompositionSummary decomposition;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, double>> timings;  // seconds

  /// Commutative flag, square and decomposition agree.
  bool consistent() const;
};

/// Runs the full pipeline. Module errors end up in report.notes.
AnalysisReport analyze(const HadamardMatrix& h, const AnalyzeOptions& options = {},
                       std::string descriptor = "");

/// Resolves a catalogue name ("fourier:6", "mq:1/4", ...) or a .chm path.
HadamardMatrix load_matrix(const std::string& name_or_path, double tol = kDefaultTol);

inline constexpr const char* kReportSchema = "hadamaq-report/1";

nlohmann::ordered_json witness_to_json(const EquivalenceWitness& w);
nlohmann::ordered_json fingerprint_to_json(const GroupFingerprint& f);
nlohmann::ordered_json report_to_json(const AnalysisReport& r, bool with_timings);

/// Serializes with fixed key order and every double printed with 17
/// significant digits, so equal inputs give byte-identical text.
std::string dump_deterministic(const nlohmann::ordered_json& j, int indent = 2);

}  // namespace hadamaq

#endif  // HADAMAQ_ANALYSIS_H
