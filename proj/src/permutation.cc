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

#include "hadamaq/permutation.h"

#include <numeric>

#include "hadamaq/error.h"

namespace hadamaq {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x]) {
      throw Error(Errc::kInvalidParameter, "image list is not a bijection");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < degree(); ++x) inv[images_[x]] = x;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += "(";
    int x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = images_[x];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error(Errc::kNotComposable, "permutations of different degree");
  }
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[x] = p(q(x));
  return Permutation(std::move(images));
}

}  // namespace hadamaq
