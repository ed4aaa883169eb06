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
#include <numbers>

#include <gtest/gtest.h>

#include "hadamaq/error.h"
#include "hadamaq/hadamard.h"
#include "hadamaq/magic_square.h"
#include "hadamaq/magic_unitary.h"

namespace hadamaq {
namespace {

CMatrix projector(int n, int k) {
  CMatrix e = CMatrix::Zero(n, n);
  e(k, k) = 1.0;
  return e;
}

MagicSquare klein_square() {
  return MagicSquare({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

TEST(MagicBasis, FourierIsPowersOfRho) {
  for (int n = 2; n <= 7; ++n) {
    const MagicBasis xi = magic_basis(fourier(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) EXPECT_EQ(xi(i, j)[k], Phase::exact((j - i) * k, n));
  }
}

TEST(MagicBasis, DiagonalIsConstant) {
  for (const HadamardMatrix& h : {haagerup(), tao(), mq(Phase::exact(1, 5))}) {
    const MagicBasis xi = magic_basis(h);
    for (int i = 0; i < h.size(); ++i)
      for (const Phase& p : xi(i, i)) EXPECT_EQ(p, Phase::one());
  }
  const MagicBasis f2 = magic_basis(fourier(2));
  EXPECT_EQ(f2(0, 1), (UnitVector{Phase::one(), Phase::exact(1, 2)}));
}

TEST(MagicBasis, RowsAndColumnsAreOrthogonalBases) {
  const HadamardMatrix h = apply_equivalence(haagerup(), random_witness(6, 3));
  const MagicBasis xi = magic_basis(h);
  const int n = h.size();
  auto inner = [](const UnitVector& a, const UnitVector& b) {
    std::complex<double> s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k].value() * std::conj(b[k].value());
    return s;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        EXPECT_NEAR(std::abs(inner(xi(i, j), xi(i, k))), j == k ? n : 0.0, n * 1e-9);
        EXPECT_NEAR(std::abs(inner(xi(i, j), xi(k, j))), i == k ? n : 0.0, n * 1e-9);
      }
    }
  }
}

TEST(ProjectionGrid, Examples) {
  const ProjectionGrid p2 = projection_grid(fourier(2));
  CMatrix expected(2, 2);
  expected << 0.5, -0.5, -0.5, 0.5;
  EXPECT_LT((p2(0, 1) - expected).norm(), 1e-15);

  const ProjectionGrid pt = projection_grid(tao());
  const CMatrix flat = CMatrix::Constant(6, 6, 1.0 / 6);
  for (int i = 0; i < 6; ++i) EXPECT_LT((pt(i, i) - flat).norm(), 1e-15);

  const ProjectionGrid p3 = projection_grid(fourier(3));
  for (int i = 0; i < 3; ++i) {
    CMatrix sum = CMatrix::Zero(3, 3);
    for (int j = 0; j < 3; ++j) sum += p3(i, j);
    EXPECT_LT((sum - CMatrix::Identity(3, 3)).norm(), 1e-12);
  }
}

TEST(ProjectionGrid, Convention) {
  const HadamardMatrix h = mq(Phase::exact(1, 8));
  const MagicBasis xi = magic_basis(h);
  const ProjectionGrid p = projection_grid(xi);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      EXPECT_LT(std::abs(p(1, 2)(a, b) - xi(1, 2)[a].value() * std::conj(xi(1, 2)[b].value()) / 4.0),
                1e-15);
}

TEST(ValidateMagicUnitary, CatalogueGridsPass) {
  for (const char* name : {"tao", "haagerup", "fourier:7", "mq:1/5", "fourier:2*fourier:3"}) {
    const MagicUnitaryReport r = validate_magic_unitary(projection_grid(catalogue(name)));
    EXPECT_TRUE(r.magic) << name;
    EXPECT_TRUE(r.rank_one) << name;
    EXPECT_LE(r.max_sum_residual, 1e-9);
    EXPECT_LE(r.max_projection_residual, 1e-9);
  }
}

TEST(ValidateMagicUnitary, ZeroCellFails) {
  std::vector<CMatrix> cells = projection_grid(fourier(3)).cells();
  cells[4] = CMatrix::Zero(3, 3);
  const MagicUnitaryReport r = validate_magic_unitary(3, cells);
  EXPECT_FALSE(r.magic);
  EXPECT_GT(r.max_sum_residual, 0.5);
}

TEST(ValidateMagicUnitary, ShapeMismatch) {
  std::vector<CMatrix> cells(4, CMatrix::Identity(2, 2));
  EXPECT_THROW(validate_magic_unitary(3, cells), Error);
  cells[1] = CMatrix::Identity(3, 3);
  EXPECT_THROW(validate_magic_unitary(2, cells), Error);
}

TEST(ESigma, CoordinateProjectionsWithKleinSquare) {
  std::vector<CMatrix> e;
  for (int k = 0; k < 4; ++k) e.push_back(projector(4, k));
  const MagicSquare s = klein_square();
  const ProjectionGrid g = e_sigma(e, s);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(g(i, j), e[s(i, j)]);
  EXPECT_TRUE(validate_magic_unitary(g).magic);
}

TEST(ESigma, Trivial) {
  const ProjectionGrid g = e_sigma({CMatrix::Identity(1, 1)}, MagicSquare(SymbolGrid{{0}}));
  ASSERT_EQ(g.size(), 1);
  EXPECT_EQ(g(0, 0), CMatrix::Identity(1, 1));
}

TEST(ESigma, FourierFirstRowRebuildsGrid) {
  for (int n = 2; n <= 6; ++n) {
    const ProjectionGrid p = projection_grid(fourier(n));
    const ProjectionGrid g = e_sigma(first_row(p), MagicSquare::circulant(n));
    EXPECT_LE(grid_distance(p, g), 1e-12) << n;
  }
}

TEST(ESigma, Preconditions) {
  std::vector<CMatrix> e{projector(2, 0), projector(2, 0)};
  EXPECT_THROW(e_sigma(e, MagicSquare::circulant(2)), Error);
  EXPECT_THROW(e_sigma({CMatrix::Identity(2, 2)}, MagicSquare(SymbolGrid{{0}})), Error);
  EXPECT_THROW(e_sigma({projector(2, 0)}, MagicSquare::circulant(2)), Error);
}

TEST(BlockConcat, TwoByTwoBlocks) {
  const CMatrix p = projector(2, 0);
  const CMatrix q = CMatrix::Identity(2, 2) - p;
  const ProjectionGrid u(2, {p, q, q, p});
  const ProjectionGrid g = block_concat(u, u);
  ASSERT_EQ(g.size(), 4);
  EXPECT_EQ(g(0, 0), p);
  EXPECT_EQ(g(0, 1), q);
  EXPECT_EQ(g(3, 2), q);
  EXPECT_EQ(g(0, 2), CMatrix::Zero(2, 2));
  EXPECT_EQ(g(3, 1), CMatrix::Zero(2, 2));
  EXPECT_TRUE(validate_magic_unitary(g).magic);
}

TEST(BlockConcat, OneByOne) {
  const ProjectionGrid one(1, {CMatrix::Identity(1, 1)});
  const ProjectionGrid g = block_concat(one, one);
  EXPECT_EQ(g(0, 0), CMatrix::Identity(1, 1));
  EXPECT_EQ(g(0, 1), CMatrix::Zero(1, 1));
  EXPECT_TRUE(validate_magic_unitary(g).magic);
}

TEST(BlockConcat, ValidInputsGiveValidOutput) {
  const ProjectionGrid a = projection_grid(fourier(3));
  const ProjectionGrid b = projection_grid(tao());
  EXPECT_THROW(block_concat(a, b), Error);
  EXPECT_TRUE(validate_magic_unitary(block_concat(a, a)).magic);
  const ProjectionGrid c = projection_grid(fourier(6));
  EXPECT_TRUE(validate_magic_unitary(block_concat(b, c)).magic);
}

TEST(Commutation, FourierCommutes) {
  for (int n = 1; n <= 8; ++n) {
    const CommutationProfile c = commutation_profile(projection_grid(fourier(n)));
    EXPECT_TRUE(c.commutative()) << n;
    EXPECT_LE(c.max_norm, 1e-12);
  }
}

TEST(Commutation, TaoAndHaagerupDoNot) {
  for (const HadamardMatrix& h : {tao(), haagerup()}) {
    const CommutationProfile c = commutation_profile(projection_grid(h));
    EXPECT_EQ(c.verdict, Commutativity::kNonCommutative);
    EXPECT_GE(c.max_norm, 0.1);
  }
}

TEST(Commutation, SmallSizesAlwaysCommute) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(commutation_profile(projection_grid(apply_equivalence(fourier(2), random_witness(2, seed)))).commutative());
    EXPECT_TRUE(commutation_profile(projection_grid(apply_equivalence(fourier(3), random_witness(3, seed)))).commutative());
  }
}

TEST(Commutation, GenericMqDoesNotCommute) {
  const CommutationProfile c =
      commutation_profile(projection_grid(mq(Phase::approx(std::polar(1.0, 0.3)))));
  EXPECT_EQ(c.verdict, Commutativity::kNonCommutative);
}

// Dual route: the vector formula and explicit matrix products agree.
TEST(Commutation, FastPathMatchesDense) {
  for (const char* name : {"fourier:6", "tao", "haagerup", "mq:1/8", "mq:1/3", "fourier:2*fourier:2"}) {
    const ProjectionGrid p = projection_grid(catalogue(name));
    const CommutationProfile fast = commutation_profile(p);
    const CommutationProfile dense = commutation_profile_dense(ProjectionGrid(p.size(), p.cells()));
    EXPECT_NEAR(fast.max_norm, dense.max_norm, 1e-9) << name;
    EXPECT_EQ(fast.verdict, dense.verdict) << name;
  }
}

TEST(Commutation, Thresholds) {
  EXPECT_EQ(classify_commutator_norm(0.0), Commutativity::kCommutative);
  EXPECT_EQ(classify_commutator_norm(1e-8), Commutativity::kCommutative);
  EXPECT_EQ(classify_commutator_norm(1e-4), Commutativity::kIndeterminate);
  EXPECT_EQ(classify_commutator_norm(0.1), Commutativity::kNonCommutative);
}

TEST(Commutation, EquivalenceInvariant) {
  for (const char* name : {"tao", "haagerup", "fourier:5", "mq:1/6"}) {
    const HadamardMatrix h = catalogue(name);
    const CommutationProfile base = commutation_profile(projection_grid(h));
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const CommutationProfile c =
          commutation_profile(projection_grid(apply_equivalence(h, random_witness(h.size(), seed))));
      EXPECT_EQ(c.verdict, base.verdict);
      EXPECT_NEAR(c.max_norm, base.max_norm, 1e-9);
    }
  }
}

TEST(Kronecker, TensorGridFactorizes) {
  const HadamardMatrix a = fourier(2);
  const HadamardMatrix b = mq(Phase::exact(1, 8));
  const ProjectionGrid pa = projection_grid(a);
  const ProjectionGrid pb = projection_grid(b);
  const ProjectionGrid pt = projection_grid(tensor(a, b));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
          EXPECT_LT((pt(i * 4 + x, j * 4 + y) - kronecker(pa(i, j), pb(x, y))).norm(), 1e-10);
}

}  // namespace
}  // namespace hadamaq
