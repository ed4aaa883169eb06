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

#include "hadamaq/magic_unitary.h"

#include <algorithm>
#include <cmath>

#include "hadamaq/error.h"
#include "hadamaq/magic_square.h"

namespace hadamaq {

ProjectionGrid::ProjectionGrid(int n, std::vector<CMatrix> cells)
    : n_(n), cells_(std::move(cells)) {
  if (n < 0 || cells_.size() != static_cast<std::size_t>(n) * n) {
    throw Error(Errc::kShapeMismatch, "grid must hold n * n cells");
  }
  dim_ = cells_.empty() ? 0 : static_cast<int>(cells_.front().rows());
  for (const CMatrix& c : cells_) {
    if (c.rows() != dim_ || c.cols() != dim_) {
      throw Error(Errc::kShapeMismatch, "cells must be square of a common size");
    }
  }
}

ProjectionGrid ProjectionGrid::from_vectors(int n, const std::vector<CVector>& vectors) {
  std::vector<CMatrix> cells;
  std::vector<CVector> units;
  cells.reserve(vectors.size());
  units.reserve(vectors.size());
  for (const CVector& v : vectors) {
    const CVector u = v / v.norm();
    cells.push_back(u * u.adjoint());
    units.push_back(u);
  }
  ProjectionGrid grid(n, std::move(cells));
  grid.unit_vectors_ = std::move(units);
  return grid;
}

MagicBasis magic_basis(const HadamardMatrix& h) {
  MagicBasis xi;
  xi.n = h.size();
  xi.xi.reserve(static_cast<std::size_t>(xi.n) * xi.n);
  for (int i = 0; i < xi.n; ++i) {
    for (int j = 0; j < xi.n; ++j) xi.xi.push_back(vec_quot(h.row(j), h.row(i)));
  }
  return xi;
}

ProjectionGrid projection_grid(const MagicBasis& xi) {
  std::vector<CVector> vectors;
  vectors.reserve(xi.xi.size());
  for (const UnitVector& v : xi.xi) {
    CVector c(static_cast<Eigen::Index>(v.size()));
    for (std::size_t a = 0; a < v.size(); ++a) c(static_cast<Eigen::Index>(a)) = v[a].value();
    vectors.push_back(std::move(c));
  }
  return ProjectionGrid::from_vectors(xi.n, vectors);
}

ProjectionGrid projection_grid(const HadamardMatrix& h) {
  return projection_grid(magic_basis(h));
}

MagicUnitaryReport validate_magic_unitary(const ProjectionGrid& p, double tol) {
  const int n = p.size();
  const int d = p.dim();
  MagicUnitaryReport report;
  report.n = n;
  report.rank_one = true;
  const CMatrix id = CMatrix::Identity(d, d);
  for (const CMatrix& c : p.cells()) {
    const double idem = (c * c - c).norm();
    const double adj = (c - c.adjoint()).norm();
    report.idempotence.push_back(idem);
    report.self_adjointness.push_back(adj);
    report.max_projection_residual = std::max({report.max_projection_residual, idem, adj});
    if (std::abs(c.trace() - std::complex<double>(1.0)) > tol) report.rank_one = false;
  }
  for (int i = 0; i < n; ++i) {
    CMatrix row = CMatrix::Zero(d, d);
    CMatrix col = CMatrix::Zero(d, d);
    for (int j = 0; j < n; ++j) {
      row += p(i, j);
      col += p(j, i);
    }
    report.row_sums.push_back((row - id).norm());
    report.col_sums.push_back((col - id).norm());
    report.max_sum_residual =
        std::max({report.max_sum_residual, report.row_sums.back(), report.col_sums.back()});
  }
  if (n == 0) report.rank_one = false;
  report.magic = n > 0 && report.max_projection_residual <= tol &&
                 report.max_sum_residual <= tol;
  return report;
}

MagicUnitaryReport validate_magic_unitary(int n, const std::vector<CMatrix>& cells,
                                          double tol) {
  return validate_magic_unitary(ProjectionGrid(n, cells), tol);
}

ProjectionGrid e_sigma(const std::vector<CMatrix>& e, const MagicSquare& sigma, double tol) {
  const int n = sigma.size();
  if (static_cast<int>(e.size()) != n) {
    throw Error(Errc::kShapeMismatch, "need one projection per symbol of the square");
  }
  if (n == 0) return ProjectionGrid();
  const auto d = e.front().rows();
  CMatrix sum = CMatrix::Zero(d, d);
  for (const CMatrix& c : e) {
    if (c.rows() != d || c.cols() != d) {
      throw Error(Errc::kShapeMismatch, "projections must share a size");
    }
    if ((c * c - c).norm() > tol || (c - c.adjoint()).norm() > tol) {
      throw Error(Errc::kNotPartitionOfUnity, "entry is not a projection");
    }
    sum += c;
  }
  if ((sum - CMatrix::Identity(d, d)).norm() > tol) {
    throw Error(Errc::kNotPartitionOfUnity, "projections do not sum to the identity");
  }
  for (const CMatrix& c : e) {
    if (std::abs(c.trace() - std::complex<double>(1.0)) > tol) {
      throw Error(Errc::kNotRankOne, "projection is not of rank one");
    }
  }
  std::vector<CMatrix> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cells.push_back(e[sigma(i, j)]);
  }
  return ProjectionGrid(n, std::move(cells));
}

ProjectionGrid block_concat(const ProjectionGrid& u, const ProjectionGrid& v) {
  if (u.dim() != v.dim()) {
    throw Error(Errc::kShapeMismatch, "blocks must act on the same space");
  }
  const int n = u.size();
  const int m = v.size();
  const int size = n + m;
  const CMatrix zero = CMatrix::Zero(u.dim(), u.dim());
  std::vector<CMatrix> cells(static_cast<std::size_t>(size) * size, zero);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cells[static_cast<std::size_t>(i) * size + j] = u(i, j);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      cells[static_cast<std::size_t>(n + i) * size + (n + j)] = v(i, j);
    }
  }
  return ProjectionGrid(size, std::move(cells));
}

Commutativity classify_commutator_norm(double max_norm) {
  if (max_norm <= kCommutativeBelow) return Commutativity::kCommutative;
  if (max_norm >= kNonCommutativeAbove) return Commutativity::kNonCommutative;
  return Commutativity::kIndeterminate;
}

const char* commutativity_name(Commutativity c) {
  switch (c) {
    case Commutativity::kCommutative: return "commutative";
    case Commutativity::kNonCommutative: return "non-commutative";
    case Commutativity::kIndeterminate: return "indeterminate";
  }
  return "unknown";
}

CommutationProfile commutation_profile_dense(const ProjectionGrid& p) {
  const auto& cells = p.cells();
  double worst = 0.0;
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      const CMatrix ab = cells[a] * cells[b];
      const CMatrix ba = cells[b] * cells[a];
      worst = std::max(worst, (ab - ba).norm());
    }
  }
  return {worst, classify_commutator_norm(worst)};
}

CommutationProfile commutation_profile(const ProjectionGrid& p) {
  if (!p.has_vectors()) return commutation_profile_dense(p);
  const int n = p.size();
  std::vector<const CVector*> vs;
  vs.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) vs.push_back(&p.vector(i, j));
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    const CVector& x = *vs[a];
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      const CVector& y = *vs[b];
      // The residual of y off x is formed explicitly; 1 - |c|^2 loses
      // everything to cancellation when y is parallel to x.
      const std::complex<double> c = x.dot(y);
      const double off = (y - c * x).norm();
      worst = std::max(worst, std::sqrt(2.0) * std::abs(c) * off);
    }
  }
  return {worst, classify_commutator_norm(worst)};
}

std::vector<CMatrix> first_row(const ProjectionGrid& p) {
  std::vector<CMatrix> row;
  for (int j = 0; j < p.size(); ++j) row.push_back(p(0, j));
  return row;
}

double grid_distance(const ProjectionGrid& p, const ProjectionGrid& q) {
  if (p.size() != q.size() || p.dim() != q.dim()) {
    throw Error(Errc::kShapeMismatch, "grids differ in shape");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < p.cells().size(); ++k) {
    worst = std::max(worst, (p.cells()[k] - q.cells()[k]).norm());
  }
  return worst;
}

CMatrix kronecker(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace hadamaq
