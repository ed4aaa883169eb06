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

#include "hadamaq/magic_square.h"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "hadamaq/error.h"
#include "hadamaq/magic_unitary.h"

namespace hadamaq {

namespace {

bool is_permutation_of_range(const std::vector<int>& v, int n) {
  if (static_cast<int>(v.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : v) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

bool is_latin(const SymbolGrid& grid) {
  const int n = static_cast<int>(grid.size());
  for (const auto& row : grid) {
    if (!is_permutation_of_range(row, n)) return false;
  }
  for (int j = 0; j < n; ++j) {
    std::vector<int> col(n);
    for (int i = 0; i < n; ++i) col[i] = grid[i][j];
    if (!is_permutation_of_range(col, n)) return false;
  }
  return true;
}

MagicSquare::MagicSquare(SymbolGrid grid) : grid_(std::move(grid)) {
  if (!is_latin(grid_)) {
    throw Error(Errc::kNotMagic, "rows and columns must be permutations of 0..n-1");
  }
  for (int i = 0; i < size(); ++i) {
    if (grid_[0][i] != i || grid_[i][i] != 0) {
      throw Error(Errc::kNotNormalized,
                  "first row must be the identity and the diagonal zero");
    }
  }
}

MagicSquare MagicSquare::circulant(int n) {
  SymbolGrid g(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g[i][j] = ((j - i) % n + n) % n;
  }
  return MagicSquare(std::move(g));
}

NormalizedSquare normalize(const SymbolGrid& raw) {
  if (!is_latin(raw)) {
    throw Error(Errc::kNotMagic, "rows and columns must be permutations of 0..n-1");
  }
  const int n = static_cast<int>(raw.size());
  std::vector<int> col_perm(n);
  for (int c = 0; c < n; ++c) col_perm[raw[0][c]] = c;
  std::vector<int> row_perm(n);
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < n; ++i) {
      if (raw[r][col_perm[i]] == 0) row_perm[i] = r;
    }
  }
  SymbolGrid out(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[i][j] = raw[row_perm[i]][col_perm[j]];
  }
  return {MagicSquare(std::move(out)), Permutation(std::move(row_perm)),
          Permutation(std::move(col_perm))};
}

std::variant<ExtractedSquare, NotCommutativeStructure> extract_square(
    const ProjectionGrid& p, double tol) {
  const int n = p.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if ((p(0, a) - p(0, b)).norm() <= 2.0 * tol) {
        return NotCommutativeStructure{0, b, "first-row projections are not distinct"};
      }
    }
  }
  SymbolGrid raw(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double best = std::numeric_limits<double>::infinity();
      double second = best;
      int best_k = -1;
      for (int k = 0; k < n; ++k) {
        const double d = (p(i, j) - p(0, k)).norm();
        if (d < best) {
          second = best;
          best = d;
          best_k = k;
        } else if (d < second) {
          second = d;
        }
      }
      if (best > tol) {
        return NotCommutativeStructure{i, j, "cell matches no first-row projection"};
      }
      if (second <= 2.0 * tol) {
        return NotCommutativeStructure{i, j, "cell matches several first-row projections"};
      }
      raw[i][j] = best_k;
    }
  }
  if (!is_latin(raw)) {
    return NotCommutativeStructure{-1, -1, "matched symbols do not form a magic square"};
  }
  try {
    MagicSquare square(raw);
    return ExtractedSquare{std::move(square), raw, false, Permutation::identity(n),
                           Permutation::identity(n)};
  } catch (const Error& e) {
    if (e.code() != Errc::kNotNormalized) throw;
  }
  NormalizedSquare norm = normalize(raw);
  return ExtractedSquare{std::move(norm.square), raw, true, std::move(norm.row_perm),
                         std::move(norm.col_perm)};
}

std::vector<Permutation> rows_as_permutations(const MagicSquare& s) {
  std::vector<Permutation> rows;
  rows.reserve(s.size());
  for (const auto& row : s.grid()) rows.emplace_back(row);
  return rows;
}

void write_msq(std::ostream& out, const MagicSquare& s) {
  out << "msq v1 n=" << s.size() << "\n";
  for (const auto& row : s.grid()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
}

std::string to_msq(const MagicSquare& s) {
  std::ostringstream out;
  write_msq(out, s);
  return out.str();
}

SymbolGrid read_msq(std::istream& in) {
  std::string magic;
  std::string version;
  std::string size;
  if (!(in >> magic >> version >> size) || magic != "msq" || version != "v1" ||
      size.rfind("n=", 0) != 0) {
    throw Error(Errc::kParse, "msq: expected header 'msq v1 n=<n>'");
  }
  int n = 0;
  try {
    n = std::stoi(size.substr(2));
  } catch (const std::logic_error&) {
    throw Error(Errc::kParse, "msq: bad size '" + size + "'");
  }
  if (n < 1) throw Error(Errc::kParse, "msq: size must be positive");
  SymbolGrid grid(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(in >> grid[i][j])) {
        throw Error(Errc::kParse, "msq: expected " + std::to_string(n * n) + " integers");
      }
    }
  }
  std::string extra;
  if (in >> extra) throw Error(Errc::kParse, "msq: trailing data");
  return grid;
}

SymbolGrid parse_msq(const std::string& text) {
  std::istringstream in(text);
  return read_msq(in);
}

}  // namespace hadamaq
