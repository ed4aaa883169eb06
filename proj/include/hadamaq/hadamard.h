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

#ifndef HADAMAQ_HADAMARD_H
#define HADAMAQ_HADAMARD_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hadamaq/phase.h"

namespace hadamaq {

/// Square grid of phases, row-major. No orthogonality is implied.
class PhaseMatrix {
 public:
  PhaseMatrix() = default;
  explicit PhaseMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}
  /// Throws Errc::kNonSquare when the rows do not form an n x n grid.
  static PhaseMatrix from_rows(const std::vector<std::vector<Phase>>& rows);

  int size() const { return n_; }
  Phase& operator()(int i, int j) { return entries_[index(i, j)]; }
  const Phase& operator()(int i, int j) const { return entries_[index(i, j)]; }
  std::span<const Phase> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i) * n_,
            static_cast<std::size_t>(n_)};
  }
  bool all_exact() const;

  friend bool operator==(const PhaseMatrix&, const PhaseMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }
  int n_ = 0;
  std::vector<Phase> entries_;
};

enum class Mode { kExact, kApprox };

struct ValidationReport {
  int n = 0;
  /// Entries (i, j) whose modulus is off the unit circle by more than tol.
  std::vector<std::pair<int, int>> non_unit_entries;
  /// max_{i != j} |<h_i, h_j>| / n together with max_i |<h_i, h_i> - n| / n.
  double row_residual = 0.0;
  /// Same quantity for columns; a redundancy check on the row test.
  double col_residual = 0.0;
  bool unit_modulus = true;
  bool hadamard = false;
};

ValidationReport validate(const PhaseMatrix& m, double tol = kDefaultTol);
/// Throws Errc::kNonSquare for ragged or non-square input.
ValidationReport validate(const std::vector<std::vector<Phase>>& rows,
                          double tol = kDefaultTol);

/// A complex Hadamard matrix: unit-modulus entries, mutually orthogonal rows.
class HadamardMatrix {
 public:
  /// Validates; throws Errc::kNotHadamard when the grid fails.
  explicit HadamardMatrix(PhaseMatrix entries, double tol = kDefaultTol);

  int size() const { return entries_.size(); }
  Mode mode() const { return entries_.all_exact() ? Mode::kExact : Mode::kApprox; }
  const Phase& operator()(int i, int j) const { return entries_(i, j); }
  std::span<const Phase> row(int i) const { return entries_.row(i); }
  const PhaseMatrix& entries() const { return entries_; }

  friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

 private:
  PhaseMatrix entries_;
};

/// Row/column permutations and phases relating two matrices:
///   target(i, j) = row_phases[i] * col_phases[j] * source(row_perm[i], col_perm[j]).
struct EquivalenceWitness {
  std::vector<int> row_perm;
  std::vector<int> col_perm;
  std::vector<Phase> row_phases;
  std::vector<Phase> col_phases;

  static EquivalenceWitness identity(int n);
  int size() const { return static_cast<int>(row_perm.size()); }
  bool is_identity() const;
  friend bool operator==(const EquivalenceWitness&, const EquivalenceWitness&) = default;
};

/// Seeded witness with uniformly random permutations and phases drawn from
/// the phase_order-th roots of unity.
EquivalenceWitness random_witness(int n, std::uint64_t seed, int phase_order = 24);

/// Throws Errc::kDimensionMismatch when the witness size differs from h.
HadamardMatrix apply_equivalence(const HadamardMatrix& h, const EquivalenceWitness& w);
PhaseMatrix apply_equivalence(const PhaseMatrix& m, const EquivalenceWitness& w);

/// Witness composition: apply_equivalence(h, compose(a, b)) equals
/// apply_equivalence(apply_equivalence(h, a), b).
EquivalenceWitness compose(const EquivalenceWitness& a, const EquivalenceWitness& b);

// Catalogue. All constructors return exact matrices.

/// F(i, j) = w^{ij}, w = e^{2 pi i / n}, indices from 0.
HadamardMatrix fourier(int n);
/// The same matrix with indices running from 1, F(i, j) = w^{(i+1)(j+1)}.
/// Obtained from fourier(n) through apply_equivalence.
HadamardMatrix fourier_one_based(int n);
/// The 4 x 4 one-parameter family with rows (1,1,1,1), (1,q,-1,-q),
/// (1,-1,1,-1), (1,-q,-1,q).
HadamardMatrix mq(const Phase& q);
/// The 6 x 6 level-4 matrix with i on the diagonal.
HadamardMatrix haagerup();
/// The 6 x 6 matrix over the cube roots of unity.
HadamardMatrix tao();
/// s-fold tensor power of fourier(2); sylvester(0) is the 1 x 1 matrix.
HadamardMatrix sylvester(int s);

/// Builds a matrix from a name of the form used on the command line:
/// "fourier:6", "mq:1/4", "haagerup", "tao", "sylvester:3", and tensor
/// products joined with '*' such as "fourier:2*fourier:3".
/// Throws Errc::kUnknownName or Errc::kInvalidParameter.
HadamardMatrix catalogue(const std::string& input);
/// Names accepted by catalogue(), with parameter placeholders.
std::vector<std::string> catalogue_names();

/// Parses "k/l" into Exact(k, l).
Phase parse_root(const std::string& text);

struct DephaseResult {
  HadamardMatrix matrix;
  EquivalenceWitness witness;
  /// Set when no column permutation fixing column 0 puts 1 on every
  /// diagonal entry; the matrix then has only its first row and column
  /// normalized.
  bool diagonal_incomplete = false;
};

/// Normalizes the first row and column to 1 (rows scaled first, then
/// columns), then permutes columns 1..n-1 to put 1 on the diagonal when
/// that is possible.
DephaseResult dephase(const HadamardMatrix& h, double tol = kDefaultTol);

/// Row and column scaling only: the first row and column become 1.
DephaseResult dephase_border(const HadamardMatrix& h);

/// Smallest l <= max_order with every entry an l-th root of unity;
/// nullopt stands for an infinite level. Approximate entries are snapped.
std::optional<int> butson_level(const HadamardMatrix& h, int max_order = kDefaultMaxOrder,
                                double tol = kDefaultTol);

/// (h (x) k)(i*m + a, j*m + b) = h(i, j) k(a, b).
HadamardMatrix tensor(const HadamardMatrix& h, const HadamardMatrix& k);

/// fourier(d_1) (x) ... (x) fourier(d_r); the 1 x 1 matrix for an empty list.
HadamardMatrix tensor_fourier(std::span<const int> sizes);

// ".chm" text format:
//   chm v1 n=<n> mode=<exact|approx> [order=<l>]
// followed by n rows of n integers k (entry e^{2 pi i k / l}) in exact mode,
// or n tokens "<re>,<im>" in approx mode.

/// Exact output whenever every entry is an exact root of unity or snaps to
/// one of order <= max_order; approx output otherwise.
void write_chm(std::ostream& out, const HadamardMatrix& h,
               int max_order = kDefaultMaxOrder);
std::string to_chm(const HadamardMatrix& h, int max_order = kDefaultMaxOrder);
/// Throws Errc::kParse on malformed text and Errc::kNotHadamard when the
/// grid is not Hadamard.
HadamardMatrix read_chm(std::istream& in, double tol = kDefaultTol);
/// Parses without the Hadamard check.
PhaseMatrix read_chm_grid(std::istream& in);
HadamardMatrix parse_chm(const std::string& text, double tol = kDefaultTol);

}  // namespace hadamaq

#endif  // HADAMAQ_HADAMARD_H
