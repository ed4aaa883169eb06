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

#ifndef HADAMAQ_PERMUTATION_H
#define HADAMAQ_PERMUTATION_H

#include <cstddef>
#include <string>
#include <vector>

namespace hadamaq {

/// Bijection of {0..n-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Errc::kInvalidParameter unless images is a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Disjoint cycles, fixed points omitted: "(0 1)(2 3)", or "()" for the identity.
  std::string cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (p * q)(x) = p(q(x)).
Permutation operator*(const Permutation& p, const Permutation& q);

}  // namespace hadamaq

#endif  // HADAMAQ_PERMUTATION_H
