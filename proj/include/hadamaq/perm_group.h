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

#ifndef HADAMAQ_PERM_GROUP_H
#define HADAMAQ_PERM_GROUP_H

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hadamaq/magic_unitary.h"
#include "hadamaq/permutation.h"
#include "hadamaq/phase.h"

namespace hadamaq {

/// Unitary monomial matrix with exact phases: row i holds phases[i] in
/// column cols[i] and zeros elsewhere. The (cols, phases) pair is the
/// canonical form used for hashing.
class Monomial {
 public:
  Monomial() = default;
  /// Throws Errc::kInvalidParameter unless cols is a bijection and every
  /// phase is exact.
  Monomial(std::vector<int> cols, std::vector<Phase> phases);
  static Monomial identity(int n);
  /// diag(d_0, ..., d_{n-1}).
  static Monomial diagonal(std::vector<Phase> d);
  /// Permutation matrix with a 1 at (i, p(i)).
  static Monomial permutation(const Permutation& p);

  int degree() const { return static_cast<int>(cols_.size()); }
  const std::vector<int>& cols() const { return cols_; }
  const std::vector<Phase>& phases() const { return phases_; }

  Monomial inverse() const;
  /// Scalar multiple of the identity.
  bool is_scalar() const;
  Monomial scaled(const Phase& c) const;
  CMatrix to_dense() const;
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> cols_;
  std::vector<Phase> phases_;
};

/// Matrix product.
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial power(const Monomial& a, int e);

/// An element of a finite permutation or monomial matrix group.
class GroupElement {
 public:
  GroupElement(Permutation p) : value_(std::move(p)) {}  // NOLINT
  GroupElement(Monomial m) : value_(std::move(m)) {}     // NOLINT

  bool is_permutation() const { return std::holds_alternative<Permutation>(value_); }
  const Permutation* permutation() const { return std::get_if<Permutation>(&value_); }
  const Monomial* monomial() const { return std::get_if<Monomial>(&value_); }

  int degree() const;
  GroupElement inverse() const;
  GroupElement identity_like() const;
  bool is_identity() const;
  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  /// Throws Errc::kNotComposable for mixed kinds or degrees.
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

 private:
  std::variant<Permutation, Monomial> value_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

/// A finite group held as an explicit element list in breadth-first
/// discovery order, identity first.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<GroupElement> generators, std::vector<GroupElement> elements);

  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  bool contains(const GroupElement& g) const { return index_.count(g) != 0; }
  std::optional<std::size_t> index_of(const GroupElement& g) const;

 private:
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Closure of the generators under composition. Throws
/// Errc::kCapExceeded when more than cap elements appear and
/// Errc::kInvalidParameter for an empty generator list.
FiniteGroup generate(std::span<const GroupElement> gens,
                     std::size_t cap = kDefaultClosureCap);
FiniteGroup generate(std::initializer_list<GroupElement> gens,
                     std::size_t cap = kDefaultClosureCap);

/// Smallest k >= 1 with g^k = 1; throws Errc::kCapExceeded past cap.
int element_order(const GroupElement& g, int cap = 1'000'000);

enum class Family {
  kCyclic,         // params {m}
  kAbelian,        // params = invariant factors
  kDihedral,       // params {2m}: Z_m x| Z_2
  kSemidirectZ4,   // params {m}: Z_m x| Z_4
  kSymmetric,      // params {k}
  kUnrecognized,
};

struct GroupLabel {
  Family family = Family::kUnrecognized;
  std::vector<int> params;

  /// "cyclic(5)", "Z_2 x Z_2", "dihedral(12)", "Z_3 x| Z_4", "symmetric(5)".
  std::string text() const;
  friend bool operator==(const GroupLabel&, const GroupLabel&) = default;
};

struct GroupFingerprint {
  std::size_t order = 0;
  bool abelian = false;
  /// Sorted ascending.
  std::vector<int> element_orders;
  std::size_t center_order = 0;
  GroupLabel label;
};

/// Elements commuting with every generator, i.e. the center.
std::vector<std::size_t> center(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);

GroupFingerprint fingerprint(const FiniteGroup& g);

/// Invariant factors d_1 | d_2 | ... | d_k (all >= 2) of a finite abelian
/// group given the orders of all its elements; empty for the trivial group.
std::vector<int> invariant_factors_from_orders(std::span<const int> element_orders);
/// Throws Errc::kNotAbelian.
std::vector<int> invariant_factors(const FiniteGroup& g);

/// r of order m and s of order 2 with s r s = r^{-1}, generating G (|G| = 2m).
struct DihedralWitness {
  std::size_t r = 0;
  std::size_t s = 0;
};
std::optional<DihedralWitness> find_dihedral_presentation(const FiniteGroup& g, int m);

/// r of order m and s of order 4 with s r s^{-1} in {r, r^{-1}},
/// <r> and <s> meeting trivially, so <r, s> = G when |G| = 4m.
struct SemidirectWitness {
  std::size_t r = 0;
  std::size_t s = 0;
};
std::optional<SemidirectWitness> find_semidirect_z4_presentation(const FiniteGroup& g, int m);

inline constexpr std::size_t kMatchNamedLimit = 10'000;

/// First match among cyclic, abelian product, dihedral, Z_m x| Z_4 and
/// symmetric; Family::kUnrecognized otherwise or when |G| exceeds
/// kMatchNamedLimit.
GroupLabel match_named(const FiniteGroup& g);

/// Number of scalar matrices in a monomial group; 1 for permutation groups.
std::size_t scalar_subgroup_order(const FiniteGroup& g);

}  // namespace hadamaq

#endif  // HADAMAQ_PERM_GROUP_H
