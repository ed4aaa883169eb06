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

#include "hadamaq/fourier_decomp.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "hadamaq/error.h"
#include "hadamaq/perm_group.h"

namespace hadamaq {

RowClass row_class(const HadamardMatrix& h, int row) {
  const std::span<const Phase> r = h.row(row);
  UnitVector rep(r.size());
  const Phase first = r[0];
  for (std::size_t c = 0; c < r.size(); ++c) rep[c] = phase_quot(r[c], first);
  rep[0] = Phase::one();
  return {std::move(rep), row};
}

namespace {

bool near_one(const Phase& p, double tol) {
  if (p.is_exact()) return p == Phase::one();
  return phase_distance(p, Phase::one()) <= tol;
}

}  // namespace

std::variant<MagicSquare, NotClosed> quotient_table(const HadamardMatrix& h, double tol) {
  const int n = h.size();
  for (int k = 0; k < n; ++k) {
    if (!near_one(h(0, k), tol) || !near_one(h(k, 0), tol)) {
      throw Error(Errc::kInvalidParameter,
                  "quotient table needs a matrix with first row and column equal to 1");
    }
  }
  SymbolGrid table(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const UnitVector q = vec_quot(h.row(j), h.row(i));
      for (int t = 0; t < n; ++t) {
        if (vec_equal_mod_scalar(q, h.row(t), tol)) {
          table[i][j] = t;
          break;
        }
      }
      if (table[i][j] < 0) return NotClosed{i, j};
    }
  }
  return MagicSquare(std::move(table));
}

namespace {

// Rows of a border-normalized exact matrix as exponent vectors modulo L.
struct ExponentRows {
  std::int64_t modulus = 1;
  std::vector<std::vector<std::int64_t>> rows;
};

ExponentRows exponent_rows(const PhaseMatrix& m) {
  const int n = m.size();
  ExponentRows out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.modulus = std::lcm(out.modulus, m(i, j).order());
  }
  out.rows.assign(n, std::vector<std::int64_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.rows[i][j] = m(i, j).numerator() * (out.modulus / m(i, j).order());
    }
  }
  return out;
}

// Finds g_1..g_k with ord(g_t) = factors[t] whose spans multiply to the
// whole group, i.e. an internal direct sum decomposition.
bool find_basis(const std::vector<std::vector<int>>& mul, const std::vector<int>& orders,
                const std::vector<int>& factors, std::vector<int>& basis) {
  const int n = static_cast<int>(orders.size());
  std::function<bool(int, const std::vector<int>&)> search =
      [&](int t, const std::vector<int>& span) -> bool {
    if (t < 0) return static_cast<int>(span.size()) == n;
    std::vector<char> in_span(n, 0);
    for (int s : span) in_span[s] = 1;
    for (int r = 0; r < n; ++r) {
      if (orders[r] != factors[t] || in_span[r]) continue;
      std::vector<int> next;
      std::vector<char> seen(n, 0);
      bool direct = true;
      int power = 0;  // r^a, starting from the identity row 0
      for (int a = 0; a < factors[t] && direct; ++a) {
        for (int s : span) {
          const int x = mul[s][power];
          if (seen[x]) {
            direct = false;
            break;
          }
          seen[x] = 1;
          next.push_back(x);
        }
        power = mul[power][r];
      }
      if (!direct) continue;
      basis[t] = r;
      if (search(t - 1, next)) return true;
    }
    return false;
  };
  basis.assign(factors.size(), -1);
  return search(static_cast<int>(factors.size()) - 1, {0});
}

}  // namespace

DecomposeResult decompose(const HadamardMatrix& h, int max_order) {
  const int n = h.size();
  const DephaseResult border = dephase_border(h);
  PhaseMatrix exact = border.matrix.entries();
  if (!exact.all_exact()) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto snapped = snap_to_root(exact(i, j), max_order, kDefaultTol);
        if (!snapped) return SnapFailure{i, j};
        exact(i, j) = *snapped;
      }
    }
  }
  const ExponentRows er = exponent_rows(exact);
  const std::int64_t modulus = er.modulus;
  std::map<std::vector<std::int64_t>, int> row_of;
  for (int i = 0; i < n; ++i) row_of.emplace(er.rows[i], i);

  // mul[a][b]: row whose class is class(a) * class(b).
  std::vector<std::vector<int>> mul(n, std::vector<int>(n, -1));
  std::vector<std::int64_t> v(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int c = 0; c < n; ++c) v[c] = ((er.rows[j][c] - er.rows[i][c]) % modulus + modulus) % modulus;
      const auto it = row_of.find(v);
      if (it == row_of.end()) return NotCommutative{NotClosed{i, j}};
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) v[c] = (er.rows[a][c] + er.rows[b][c]) % modulus;
      mul[a][b] = row_of.at(v);
    }
  }

  std::vector<int> orders(n);
  for (int r = 0; r < n; ++r) {
    std::int64_t g = modulus;
    for (std::int64_t e : er.rows[r]) g = std::gcd(g, e);
    orders[r] = static_cast<int>(modulus / g);
  }
  const std::vector<int> factors = invariant_factors_from_orders(orders);
  std::vector<int> basis;
  if (!find_basis(mul, orders, factors, basis)) {
    throw Error(Errc::kInvalidParameter, "row classes admit no cyclic basis");
  }

  const int k = static_cast<int>(factors.size());
  std::vector<int> stride(k, 1);
  for (int t = k - 2; t >= 0; --t) stride[t] = stride[t + 1] * factors[t + 1];

  EquivalenceWitness lex = EquivalenceWitness::identity(n);
  for (int i = 0; i < n; ++i) {
    int row = 0;
    for (int t = 0; t < k; ++t) {
      const int digit = (i / stride[t]) % factors[t];
      for (int a = 0; a < digit; ++a) row = mul[row][basis[t]];
    }
    lex.row_perm[i] = row;
  }
  std::vector<int> col_at(n, -1);
  for (int c = 0; c < n; ++c) {
    int j = 0;
    for (int t = 0; t < k; ++t) {
      const std::int64_t e = er.rows[basis[t]][c];
      j += static_cast<int>(e * factors[t] / modulus) * stride[t];
    }
    if (col_at[j] >= 0) {
      throw Error(Errc::kInvalidParameter, "columns do not separate the row-class characters");
    }
    col_at[j] = c;
  }
  lex.col_perm = col_at;
  return FourierDecomposition{factors, compose(border.witness, lex)};
}

DecompositionCheck verify_decomposition(const HadamardMatrix& h, const FourierDecomposition& d,
                                        double tol) {
  int product = 1;
  for (int f : d.factor_sizes) product *= f;
  if (product != h.size() || d.witness.size() != h.size()) return {false, INFINITY};
  const PhaseMatrix mapped = apply_equivalence(h.entries(), d.witness);
  const HadamardMatrix target = tensor_fourier(d.factor_sizes);
  double residual = 0.0;
  for (int i = 0; i < h.size(); ++i) {
    for (int j = 0; j < h.size(); ++j) {
      const Phase& a = mapped(i, j);
      const Phase& b = target(i, j);
      if (a.is_exact() && b.is_exact()) {
        if (!(a == b)) residual = std::max(residual, phase_distance(a, b));
      } else {
        residual = std::max(residual, phase_distance(a, b));
      }
    }
  }
  return {residual <= tol, residual};
}

}  // namespace hadamaq
