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

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "hadamaq/error.h"
#include "hadamaq/hadamard.h"
#include "hadamaq/magic_square.h"
#include "hadamaq/magic_unitary.h"

namespace hadamaq {
namespace {

const SymbolGrid kKlein{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

TEST(MagicSquare, Validation) {
  EXPECT_TRUE(is_latin(kKlein));
  EXPECT_FALSE(is_latin({{0, 1}, {0, 1}}));
  EXPECT_FALSE(is_latin({{0, 2}, {1, 0}}));
  EXPECT_THROW(MagicSquare({{0, 1}, {0, 1}}), Error);
  EXPECT_THROW(MagicSquare({{1, 0}, {0, 1}}), Error);
  EXPECT_NO_THROW(MagicSquare{kKlein});
}

TEST(Normalize, AlreadyNormalized) {
  const NormalizedSquare n = normalize(kKlein);
  EXPECT_EQ(n.square.grid(), kKlein);
  EXPECT_TRUE(n.row_perm.is_identity());
  EXPECT_TRUE(n.col_perm.is_identity());
  for (int k = 2; k <= 7; ++k) {
    const MagicSquare c = MagicSquare::circulant(k);
    EXPECT_EQ(normalize(c.grid()).square, c);
  }
}

TEST(Normalize, RowSwapIsRecorded) {
  SymbolGrid swapped = kKlein;
  std::swap(swapped[1], swapped[2]);
  const NormalizedSquare n = normalize(swapped);
  EXPECT_EQ(n.square.grid(), kKlein);
  EXPECT_FALSE(n.row_perm.is_identity());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      EXPECT_EQ(n.square(i, j), swapped[n.row_perm(i)][n.col_perm(j)]);
}

// Property: any row/column shuffle of a Latin square normalizes and the
// recorded permutations reproduce it.
TEST(Normalize, RandomShuffles) {
  const SymbolGrid base{{0, 1, 2, 3, 4}, {2, 0, 1, 4, 3}, {3, 4, 0, 2, 1},
                        {1, 3, 4, 0, 2}, {4, 2, 3, 1, 0}};
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> rp{0, 1, 2, 3, 4};
    std::vector<int> cp = rp;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    SymbolGrid raw(5, std::vector<int>(5));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) raw[i][j] = base[rp[i]][cp[j]];
    const NormalizedSquare n = normalize(raw);
    for (int i = 0; i < 5; ++i) {
      EXPECT_EQ(n.square(0, i), i);
      EXPECT_EQ(n.square(i, i), 0);
      for (int j = 0; j < 5; ++j) EXPECT_EQ(n.square(i, j), raw[n.row_perm(i)][n.col_perm(j)]);
    }
  }
}

TEST(ExtractSquare, Fourier) {
  for (int n = 1; n <= 8; ++n) {
    const auto r = extract_square(projection_grid(fourier(n)));
    ASSERT_TRUE(std::holds_alternative<ExtractedSquare>(r)) << n;
    const ExtractedSquare& s = std::get<ExtractedSquare>(r);
    EXPECT_EQ(s.square, MagicSquare::circulant(n));
    EXPECT_FALSE(s.adjusted);
  }
}

TEST(ExtractSquare, MqOfOneGivesKleinSquare) {
  const auto r = extract_square(projection_grid(mq(Phase::one())));
  ASSERT_TRUE(std::holds_alternative<ExtractedSquare>(r));
  EXPECT_EQ(std::get<ExtractedSquare>(r).square.grid(), kKlein);
}

TEST(ExtractSquare, TaoFails) {
  const auto r = extract_square(projection_grid(tao()));
  ASSERT_TRUE(std::holds_alternative<NotCommutativeStructure>(r));
  const auto& f = std::get<NotCommutativeStructure>(r);
  EXPECT_GE(f.row, 0);
  EXPECT_FALSE(f.reason.empty());
}

TEST(ExtractSquare, ESigmaRoundTrip) {
  for (const char* name : {"fourier:5", "fourier:2*fourier:2", "fourier:2*fourier:3", "mq:1/4"}) {
    const ProjectionGrid p = projection_grid(catalogue(name));
    const auto r = extract_square(p);
    ASSERT_TRUE(std::holds_alternative<ExtractedSquare>(r)) << name;
    const ExtractedSquare& s = std::get<ExtractedSquare>(r);
    if (s.adjusted) continue;
    EXPECT_LE(grid_distance(e_sigma(first_row(p), s.square), p), 1e-9) << name;
  }
}

TEST(RowsAsPermutations, KleinSquare) {
  const auto rows = rows_as_permutations(MagicSquare(kKlein));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_TRUE(rows[0].is_identity());
  EXPECT_EQ(rows[1].cycles(), "(0 1)(2 3)");
  EXPECT_EQ(rows[2].cycles(), "(0 2)(1 3)");
  EXPECT_EQ(rows[3].cycles(), "(0 3)(1 2)");
}

TEST(RowsAsPermutations, CirculantRowOneShiftsDown) {
  for (int n = 2; n <= 7; ++n) {
    const auto rows = rows_as_permutations(MagicSquare::circulant(n));
    for (int j = 0; j < n; ++j) EXPECT_EQ(rows[1](j), (j - 1 + n) % n);
  }
}

TEST(Msq, RoundTrip) {
  const MagicSquare s(kKlein);
  EXPECT_EQ(to_msq(s), "msq v1 n=4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n");
  EXPECT_EQ(parse_msq(to_msq(s)), kKlein);
  EXPECT_THROW(parse_msq("msq v1 n=2\n0 1\n1"), Error);
  EXPECT_THROW(parse_msq("chm v1 n=2"), Error);
  EXPECT_THROW(parse_msq("msq v1 n=1\n0 5"), Error);
}

TEST(Msq, ShippedFiveByFive) {
  std::ifstream in(std::string(HADAMAQ_DATA_DIR) + "/five_by_five.msq");
  ASSERT_TRUE(in);
  const SymbolGrid g = read_msq(in);
  EXPECT_NO_THROW(MagicSquare{g});
}

}  // namespace
}  // namespace hadamaq
