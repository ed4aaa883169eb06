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

#ifndef HADAMAQ_FOURIER_DECOMP_H
#define HADAMAQ_FOURIER_DECOMP_H

#include <variant>
#include <vector>

#include "hadamaq/hadamard.h"
#include "hadamaq/magic_square.h"

namespace hadamaq {

/// A row of a matrix taken modulo constant vectors, represented by the row
/// scaled to have first entry exactly 1.
struct RowClass {
  UnitVector representative;
  int index = 0;
};

RowClass row_class(const HadamardMatrix& h, int row);

/// First quotient h_j / h_i whose class is not the class of any row.
struct NotClosed {
  int i = 0;
  int j = 0;
};

/// t(i, j) with class(h_j) / class(h_i) = class(h_t(i, j)). Requires a
/// matrix whose first row and column are 1 (Errc::kInvalidParameter).
std::variant<MagicSquare, NotClosed> quotient_table(const HadamardMatrix& h,
                                                    double tol = kDefaultTol);

struct FourierDecomposition {
  /// Invariant factors d_1 | d_2 | ..., each >= 2; empty for n = 1.
  std::vector<int> factor_sizes;
  /// Maps h onto fourier(d_1) (x) fourier(d_2) (x) ...
  EquivalenceWitness witness;
};

struct NotCommutative {
  NotClosed failure;
};

/// An approximate entry (i, j) of the border-normalized matrix that is not a
/// root of unity of order <= max_order.
struct SnapFailure {
  int i = 0;
  int j = 0;
};

using DecomposeResult = std::variant<FourierDecomposition, NotCommutative, SnapFailure>;

/// Writes h, up to equivalence, as a tensor product of Fourier matrices
/// when its rows modulo constants form a group under entrywise division.
DecomposeResult decompose(const HadamardMatrix& h, int max_order = kDefaultMaxOrder);

struct DecompositionCheck {
  bool pass = false;
  double residual = 0.0;
};

/// Applies the witness and compares against the Fourier tensor product.
DecompositionCheck verify_decomposition(const HadamardMatrix& h,
                                        const FourierDecomposition& d,
                                        double tol = kDefaultTol);

}  // namespace hadamaq

#endif  // HADAMAQ_FOURIER_DECOMP_H
