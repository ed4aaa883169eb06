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

#include <complex>
#include <sstream>

#include <gtest/gtest.h>

#include "hadamaq/error.h"
#include "hadamaq/hadamard.h"

namespace hadamaq {
namespace {

const Phase kOne = Phase::one();
const Phase kMinus = Phase::exact(1, 2);
const Phase kI = Phase::exact(1, 4);

std::vector<std::vector<int>> signs(const HadamardMatrix& h) {
  std::vector<std::vector<int>> out(h.size(), std::vector<int>(h.size()));
  for (int i = 0; i < h.size(); ++i) {
    for (int j = 0; j < h.size(); ++j) {
      const auto z = h(i, j).value();
      EXPECT_NEAR(z.imag(), 0.0, 1e-15);
      out[i][j] = z.real() > 0 ? 1 : -1;
    }
  }
  return out;
}

TEST(Validate, Examples) {
  const auto f4 = validate(fourier(4).entries());
  EXPECT_TRUE(f4.hadamard);
  EXPECT_LE(f4.row_residual, 1e-12);
  EXPECT_LE(f4.col_residual, 1e-12);

  const auto ones = validate({{kOne, kOne}, {kOne, kOne}});
  EXPECT_FALSE(ones.hadamard);
  EXPECT_TRUE(ones.unit_modulus);

  EXPECT_TRUE(validate(haagerup().entries()).hadamard);
  EXPECT_TRUE(validate(tao().entries()).hadamard);
}

TEST(Validate, RejectsNonSquare) {
  EXPECT_THROW(validate({{kOne, kOne}, {kOne}}), Error);
  EXPECT_THROW(HadamardMatrix(PhaseMatrix::from_rows({{kOne, kOne}, {kOne, kOne}})), Error);
}

TEST(Catalogue, Fourier2) {
  EXPECT_EQ(signs(fourier(2)), (std::vector<std::vector<int>>{{1, 1}, {1, -1}}));
  EXPECT_EQ(catalogue("fourier:2"), fourier(2));
}

TEST(Catalogue, MqOfOne) {
  EXPECT_EQ(signs(mq(kOne)), (std::vector<std::vector<int>>{
                                 {1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}));
  EXPECT_EQ(catalogue("mq:1"), mq(kOne));
  EXPECT_EQ(catalogue("mq:1/4"), mq(kI));
  EXPECT_EQ(catalogue("mq:-i"), mq(Phase::exact(3, 4)));
}

TEST(Catalogue, Tao) {
  const HadamardMatrix t = tao();
  ASSERT_EQ(t.size(), 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) EXPECT_EQ(3 % t(i, j).order(), 0);
  }
  EXPECT_EQ(t(1, 2), Phase::exact(1, 3));
  EXPECT_EQ(t(4, 1), Phase::exact(2, 3));
}

TEST(Catalogue, HaagerupDiagonal) {
  const HadamardMatrix h = haagerup();
  for (int i = 0; i < 6; ++i) EXPECT_EQ(h(i, i), kI);
  EXPECT_EQ(h(1, 3), kMinus);
}

TEST(Catalogue, ParsesTensorSpecs) {
  EXPECT_EQ(catalogue("fourier:2*fourier:3"), tensor(fourier(2), fourier(3)));
  EXPECT_EQ(catalogue("sylvester:2"), tensor(fourier(2), fourier(2)));
  EXPECT_THROW(catalogue("nope"), Error);
  EXPECT_THROW(catalogue("fourier:0"), Error);
  EXPECT_THROW(catalogue("mq:1/x"), Error);
  EXPECT_THROW(catalogue("haagerup:3"), Error);
}

TEST(Catalogue, EveryFourierIsHadamard) {
  for (int n = 1; n <= 16; ++n) EXPECT_TRUE(validate(fourier(n).entries()).hadamard) << n;
}

TEST(Dephase, FourierUnchanged) {
  for (int n = 1; n <= 8; ++n) {
    const DephaseResult d = dephase(fourier(n));
    EXPECT_EQ(d.matrix, fourier(n));
    EXPECT_TRUE(d.witness.is_identity());
  }
}

TEST(Dephase, FirstRowTimesI) {
  const int n = 5;
  EquivalenceWitness w = EquivalenceWitness::identity(n);
  w.row_phases[0] = kI;
  const HadamardMatrix h = apply_equivalence(fourier(n), w);
  const DephaseResult d = dephase(h);
  EXPECT_EQ(d.matrix, fourier(n));
  EXPECT_EQ(d.witness.row_phases[0], Phase::exact(3, 4));
  EXPECT_EQ(apply_equivalence(h, d.witness), d.matrix);
}

TEST(Dephase, HaagerupRoundTrip) {
  const HadamardMatrix h = haagerup();
  const DephaseResult d = dephase(h);
  EXPECT_EQ(apply_equivalence(h, d.witness), d.matrix);
  for (int k = 0; k < h.size(); ++k) {
    EXPECT_EQ(d.matrix(0, k), kOne);
    EXPECT_EQ(d.matrix(k, 0), kOne);
  }
  if (!d.diagonal_incomplete) {
    for (int k = 0; k < h.size(); ++k) EXPECT_EQ(d.matrix(k, k), kOne);
  }
}

TEST(Dephase, BorderIsOneForScrambles) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const HadamardMatrix h = apply_equivalence(tao(), random_witness(6, seed));
    const DephaseResult d = dephase_border(h);
    EXPECT_EQ(apply_equivalence(h, d.witness), d.matrix);
    for (int k = 0; k < 6; ++k) {
      EXPECT_EQ(d.matrix(0, k), kOne);
      EXPECT_EQ(d.matrix(k, 0), kOne);
    }
  }
}

TEST(ButsonLevel, Examples) {
  EXPECT_EQ(butson_level(tao()), 3);
  EXPECT_EQ(butson_level(haagerup()), 4);
  EXPECT_EQ(butson_level(fourier(7)), 7);
  EXPECT_EQ(butson_level(fourier(1)), 1);
  // q of order 8: q^2 has order 4 but the entries need the 8th roots.
  EXPECT_EQ(butson_level(mq(Phase::exact(1, 8))), 8);
  EXPECT_EQ(butson_level(mq(kI)), 4);
  EXPECT_EQ(butson_level(mq(kOne)), 2);
}

TEST(ButsonLevel, InfiniteForGenericQ) {
  const HadamardMatrix h = mq(Phase::approx(std::polar(1.0, 0.3)));
  EXPECT_FALSE(butson_level(h, 48));
}

TEST(Tensor, OneBasedFourierSquareMatchesDisplay) {
  const HadamardMatrix f = fourier_one_based(2);
  EXPECT_EQ(signs(f), (std::vector<std::vector<int>>{{-1, 1}, {1, 1}}));
  EXPECT_EQ(signs(tensor(f, f)), (std::vector<std::vector<int>>{
                                     {1, -1, -1, 1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}, {1, 1, 1, 1}}));
}

TEST(Tensor, IdentityAndValidity) {
  EXPECT_EQ(tensor(haagerup(), fourier(1)), haagerup());
  EXPECT_EQ(tensor(fourier(1), tao()), tao());
  const HadamardMatrix ht = tensor(haagerup(), fourier(2));
  EXPECT_EQ(ht.size(), 12);
  EXPECT_TRUE(validate(ht.entries()).hadamard);
}

TEST(Tensor, IndexConvention) {
  const HadamardMatrix a = fourier(2);
  const HadamardMatrix b = fourier(3);
  const HadamardMatrix t = tensor(a, b);
  for (int i = 0; i < 2; ++i)
    for (int x = 0; x < 3; ++x)
      for (int j = 0; j < 2; ++j)
        for (int y = 0; y < 3; ++y) EXPECT_EQ(t(i * 3 + x, j * 3 + y), a(i, j) * b(x, y));
}

TEST(Equivalence, Examples) {
  EXPECT_EQ(apply_equivalence(tao(), EquivalenceWitness::identity(6)), tao());
  EquivalenceWitness swap = EquivalenceWitness::identity(2);
  swap.row_perm = {1, 0};
  EXPECT_EQ(signs(apply_equivalence(fourier(2), swap)),
            (std::vector<std::vector<int>>{{1, -1}, {1, 1}}));
}

TEST(Equivalence, RandomWitnessPreservesHadamard) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const EquivalenceWitness w = random_witness(6, seed);
    EXPECT_TRUE(validate(apply_equivalence(haagerup(), w).entries()).hadamard);
    EXPECT_EQ(random_witness(6, seed), w);
  }
}

TEST(Equivalence, ComposeAppliesInOrder) {
  const HadamardMatrix h = tensor(fourier(2), fourier(3));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const EquivalenceWitness a = random_witness(6, seed);
    const EquivalenceWitness b = random_witness(6, seed + 1000);
    EXPECT_EQ(apply_equivalence(apply_equivalence(h, a), b),
              apply_equivalence(h, compose(a, b)));
  }
}

TEST(Chm, RoundTripExact) {
  for (const char* name : {"fourier:5", "haagerup", "tao", "mq:1/8", "fourier:2*fourier:3"}) {
    const HadamardMatrix h = catalogue(name);
    EXPECT_EQ(parse_chm(to_chm(h)), h) << name;
  }
}

TEST(Chm, RoundTripApprox) {
  const HadamardMatrix h = mq(Phase::approx(std::polar(1.0, 0.3)));
  const HadamardMatrix back = parse_chm(to_chm(h));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_LT(phase_distance(back(i, j), h(i, j)), 1e-15);
}

TEST(Chm, ParseErrors) {
  EXPECT_THROW(parse_chm("garbage"), Error);
  EXPECT_THROW(parse_chm(""), Error);
}

}  // namespace
}  // namespace hadamaq
