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

#ifndef HADAMAQ_ERROR_H
#define HADAMAQ_ERROR_H

#include <stdexcept>
#include <string>

namespace hadamaq {

enum class Errc {
  kNonSquare,
  kNotHadamard,
  kUnknownName,
  kInvalidParameter,
  kDimensionMismatch,
  kShapeMismatch,
  kNotPartitionOfUnity,
  kNotRankOne,
  kNotMagic,
  kNotNormalized,
  kNotComposable,
  kCapExceeded,
  kNotAbelian,
  kInfiniteCase,
  kIndexOutOfRange,
  kParse,
};

const char* errc_name(Errc code);

/// Precondition and contract violations raised by the library. Domain
/// outcomes (a matrix that is not commutative, an entry that is not a root
/// of unity) are returned as values instead.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hadamaq

#endif  // HADAMAQ_ERROR_H
