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

#include <gtest/gtest.h>

#include "hadamaq/analysis.h"
#include "hadamaq/error.h"

namespace hadamaq {
namespace {

TEST(Analyze, FourierFive) {
  const AnalysisReport r = analyze(fourier(5));
  EXPECT_TRUE(r.validation.hadamard);
  EXPECT_TRUE(r.commutation.commutative());
  ASSERT_TRUE(r.group);
  EXPECT_EQ(r.group->label.text(), "cyclic(5)");
  ASSERT_TRUE(r.decomposition.decomposition);
  EXPECT_EQ(r.decomposition.decomposition->factor_sizes, (std::vector<int>{5}));
  EXPECT_TRUE(r.consistent());
  EXPECT_TRUE(r.notes.empty());
}

TEST(Analyze, MqOfI) {
  const AnalysisReport r = analyze(mq(Phase::exact(1, 4)));
  EXPECT_TRUE(r.commutation.commutative());
  ASSERT_TRUE(r.group);
  EXPECT_EQ(r.group->label.text(), "cyclic(4)");
  ASSERT_TRUE(r.decomposition.decomposition);
  EXPECT_EQ(r.decomposition.decomposition->factor_sizes, (std::vector<int>{4}));
  EXPECT_EQ(r.butson_level, 4);
}

TEST(Analyze, Haagerup) {
  const AnalysisReport r = analyze(haagerup());
  EXPECT_FALSE(r.commutation.commutative());
  EXPECT_FALSE(r.square);
  EXPECT_FALSE(r.group);
  EXPECT_FALSE(r.decomposition.decomposition);
  EXPECT_EQ(r.decomposition.status, DecompositionSummary::Status::kNotCommutative);
  EXPECT_TRUE(r.consistent());
  EXPECT_EQ(r.butson_level, 4);
}

TEST(Analyze, GenericMq) {
  const AnalysisReport r = analyze(mq(Phase::approx(std::polar(1.0, 0.3))));
  EXPECT_EQ(r.mode, Mode::kApprox);
  EXPECT_FALSE(r.butson_level);
  EXPECT_FALSE(r.commutation.commutative());
  EXPECT_EQ(r.decomposition.status, DecompositionSummary::Status::kSnapFailure);
  EXPECT_TRUE(r.consistent());
}

TEST(Analyze, ScrambleInvariance) {
  for (const char* name : {"fourier:6", "mq:1", "mq:1/4", "tao", "fourier:2*fourier:2"}) {
    const HadamardMatrix h = catalogue(name);
    const AnalysisReport base = analyze(h);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const AnalysisReport r = analyze(apply_equivalence(h, random_witness(h.size(), seed)));
      EXPECT_EQ(r.commutation.commutative(), base.commutation.commutative());
      EXPECT_EQ(r.group.has_value(), base.group.has_value());
      if (r.group && base.group) EXPECT_EQ(r.group->order, base.group->order);
      EXPECT_EQ(r.decomposition.decomposition.has_value(),
                base.decomposition.decomposition.has_value());
      if (r.decomposition.decomposition && base.decomposition.decomposition) {
        EXPECT_EQ(r.decomposition.decomposition->factor_sizes,
                  base.decomposition.decomposition->factor_sizes);
      }
    }
  }
}

TEST(Report, SchemaAndKeys) {
  const auto j = report_to_json(analyze(catalogue("fourier:6"), {}, "fourier:6"), false);
  EXPECT_EQ(j["schema"], "hadamaq-report/1");
  EXPECT_EQ(j["input"]["descriptor"], "fourier:6");
  EXPECT_EQ(j["decomposition"]["factor_sizes"], nlohmann::json::array({6}));
  EXPECT_EQ(j["group"]["label"], "cyclic(6)");
  EXPECT_FALSE(j.contains("timings"));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema", "input", "hadamard", "butson_level",
                                            "dephase", "magic_unitary", "commutation",
                                            "magic_square", "group", "decomposition",
                                            "consistent", "notes"}));
}

TEST(Report, Deterministic) {
  for (const char* name : {"tao", "fourier:2*fourier:3", "mq:1/8"}) {
    const std::string a = dump_deterministic(report_to_json(analyze(catalogue(name)), false));
    const std::string b = dump_deterministic(report_to_json(analyze(catalogue(name)), false));
    EXPECT_EQ(a, b);
    EXPECT_EQ(nlohmann::json::parse(a), nlohmann::json::parse(b));
  }
}

TEST(Report, SeventeenDigitFloats) {
  nlohmann::ordered_json j;
  j["x"] = 0.1;
  j["y"] = 1.0;
  j["v"] = {1, 2};
  EXPECT_EQ(dump_deterministic(j, -1), "{\"x\":0.10000000000000001,\"y\":1,\"v\":[1,2]}");
  EXPECT_EQ(dump_deterministic(j), "{\n  \"x\": 0.10000000000000001,\n  \"y\": 1,\n  \"v\": [1, 2]\n}");
}

TEST(Report, TimingsOnRequest) {
  AnalyzeOptions opt;
  opt.timings = true;
  const auto j = report_to_json(analyze(fourier(3), opt), true);
  ASSERT_TRUE(j.contains("timings"));
  EXPECT_TRUE(j["timings"].contains("decompose"));
}

TEST(LoadMatrix, CatalogueOrFile) {
  EXPECT_EQ(load_matrix("fourier:3"), fourier(3));
  EXPECT_THROW(load_matrix("/nonexistent/file.chm"), Error);
}

}  // namespace
}  // namespace hadamaq
