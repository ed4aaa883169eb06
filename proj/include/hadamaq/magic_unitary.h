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

#ifndef HADAMAQ_MAGIC_UNITARY_H
#define HADAMAQ_MAGIC_UNITARY_H

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hadamaq/hadamard.h"
#include "hadamaq/phase.h"

namespace hadamaq {

class MagicSquare;

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Grid xi(i, j) = h_j / h_i of unit vectors; every row and every column of
/// the grid is an orthogonal basis of C^n.
struct MagicBasis {
  int n = 0;
  std::vector<UnitVector> xi;  // row-major, n * n vectors of length n

  const UnitVector& operator()(int i, int j) const { return xi[static_cast<std::size_t>(i) * n + j]; }
};

/// A square grid of equally sized square complex matrices. Grids built from
/// vectors remember the unit vector spanning each rank-one cell, which lets
/// the commutation scan work on inner products instead of matrix products.
class ProjectionGrid {
 public:
  ProjectionGrid() = default;
  /// Throws Errc::kShapeMismatch unless cells.size() == n * n and every
  /// cell is dim x dim for a common dim.
  ProjectionGrid(int n, std::vector<CMatrix> cells);

  /// Cells P(i, j) = v v^* / |v|^2 for the given vectors.
  static ProjectionGrid from_vectors(int n, const std::vector<CVector>& vectors);

  int size() const { return n_; }
  int dim() const { return dim_; }
  const CMatrix& operator()(int i, int j) const { return cells_[index(i, j)]; }
  const std::vector<CMatrix>& cells() const { return cells_; }
  bool has_vectors() const { return !unit_vectors_.empty(); }
  /// Unit vector spanning cell (i, j); only when has_vectors().
  const CVector& vector(int i, int j) const { return unit_vectors_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_ = 0;
  int dim_ = 0;
  std::vector<CMatrix> cells_;
  std::vector<CVector> unit_vectors_;
};

MagicBasis magic_basis(const HadamardMatrix& h);

/// P(i, j)[a][b] = xi_ij[a] * conj(xi_ij[b]) / n.
ProjectionGrid projection_grid(const MagicBasis& xi);

/// projection_grid(magic_basis(h)).
ProjectionGrid projection_grid(const HadamardMatrix& h);

struct MagicUnitaryReport {
  int n = 0;
  /// Per cell (row-major): ||P^2 - P||_F and ||P - P^*||_F.
  std::vector<double> idempotence;
  std::vector<double> self_adjointness;
  /// Per row and per column: ||sum P - I||_F.
  std::vector<double> row_sums;
  std::vector<double> col_sums;
  double max_projection_residual = 0.0;
  double max_sum_residual = 0.0;
  /// Every cell has trace 1 within tol.
  bool rank_one = false;
  bool magic = false;
};

MagicUnitaryReport validate_magic_unitary(const ProjectionGrid& p, double tol = kDefaultTol);
/// Throws Errc::kShapeMismatch unless cells form a square grid of equally
/// sized square matrices.
MagicUnitaryReport validate_magic_unitary(int n, const std::vector<CMatrix>& cells,
                                          double tol = kDefaultTol);

/// Cell (i, j) = E[sigma(i, j)]. E must be a partition of unity by rank-one
/// projections (Errc::kNotPartitionOfUnity, Errc::kNotRankOne).
ProjectionGrid e_sigma(const std::vector<CMatrix>& e, const MagicSquare& sigma,
                       double tol = kDefaultTol);

/// Diagonal concatenation: u in the top-left block, v in the bottom-right,
/// zero projections elsewhere. Cells of u and v must share a dimension.
ProjectionGrid block_concat(const ProjectionGrid& u, const ProjectionGrid& v);

enum class Commutativity { kCommutative, kNonCommutative, kIndeterminate };

inline constexpr double kCommutativeBelow = 1e-8;
inline constexpr double kNonCommutativeAbove = 0.1;

struct CommutationProfile {
  /// max over all pairs of cells of ||P_ij P_kl - P_kl P_ij||_F.
  double max_norm = 0.0;
  Commutativity verdict = Commutativity::kCommutative;
  bool commutative() const { return verdict == Commutativity::kCommutative; }
};

/// Uses the stored unit vectors when present: for unit x, y with c = <x, y>,
/// ||[xx^*, yy^*]||_F^2 = 2 |c|^2 (1 - |c|^2).
CommutationProfile commutation_profile(const ProjectionGrid& p);
/// Dense route, always forming the matrix products.
CommutationProfile commutation_profile_dense(const ProjectionGrid& p);

Commutativity classify_commutator_norm(double max_norm);
const char* commutativity_name(Commutativity c);

/// First row of the grid, as a list of projections.
std::vector<CMatrix> first_row(const ProjectionGrid& p);

/// Largest entrywise distance ||P_ij - Q_ij||_F; grids must have equal shape.
double grid_distance(const ProjectionGrid& p, const ProjectionGrid& q);

CMatrix kronecker(const CMatrix& a, const CMatrix& b);

}  // namespace hadamaq

#endif  // HADAMAQ_MAGIC_UNITARY_H
