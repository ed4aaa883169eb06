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

#ifndef HADAMAQ_MAGIC_SQUARE_H
#define HADAMAQ_MAGIC_SQUARE_H

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hadamaq/permutation.h"

namespace hadamaq {

class ProjectionGrid;

using SymbolGrid = std::vector<std::vector<int>>;

/// True when every row and column of the grid is a permutation of 0..n-1.
bool is_latin(const SymbolGrid& grid);

/// n x n grid over {0..n-1} whose rows and columns are permutations, with
/// first row (0, 1, ..., n-1) and zero diagonal.
class MagicSquare {
 public:
  /// Throws Errc::kNotMagic or Errc::kNotNormalized.
  explicit MagicSquare(SymbolGrid grid);

  /// sigma(i, j) = j - i mod n.
  static MagicSquare circulant(int n);

  int size() const { return static_cast<int>(grid_.size()); }
  int operator()(int i, int j) const { return grid_[i][j]; }
  const SymbolGrid& grid() const { return grid_; }

  friend bool operator==(const MagicSquare&, const MagicSquare&) = default;

 private:
  SymbolGrid grid_;
};

struct NormalizedSquare {
  MagicSquare square;
  /// square(i, j) = raw(row_perm[i], col_perm[j]).
  Permutation row_perm;
  Permutation col_perm;
};

/// Permutes columns to make the first row the identity, then rows to zero
/// the diagonal. Throws Errc::kNotMagic when a row or column of raw is not a
/// permutation.
NormalizedSquare normalize(const SymbolGrid& raw);

struct ExtractedSquare {
  MagicSquare square;
  /// sigma as read off the grid, P(i, j) = P(0, raw(i, j)).
  SymbolGrid raw;
  /// Set when raw was not already normalized; the permutations map raw
  /// onto square as in NormalizedSquare.
  bool adjusted = false;
  Permutation row_perm;
  Permutation col_perm;
};

struct NotCommutativeStructure {
  int row = -1;
  int col = -1;
  std::string reason;
};

inline constexpr double kMatchTol = 1e-6;

/// Reads a magic square off a projection grid: each cell must lie within tol
/// (Frobenius) of exactly one first-row projection, with the runner-up
/// further than 2 tol away.
std::variant<ExtractedSquare, NotCommutativeStructure> extract_square(
    const ProjectionGrid& p, double tol = kMatchTol);

/// Row i as the permutation j -> sigma(i, j).
std::vector<Permutation> rows_as_permutations(const MagicSquare& s);

// ".msq" text format: header "msq v1 n=<n>" then n rows of n integers.
void write_msq(std::ostream& out, const MagicSquare& s);
std::string to_msq(const MagicSquare& s);
/// Reads the grid; normalization is not required. Throws Errc::kParse.
SymbolGrid read_msq(std::istream& in);
SymbolGrid parse_msq(const std::string& text);

}  // namespace hadamaq

#endif  // HADAMAQ_MAGIC_SQUARE_H
