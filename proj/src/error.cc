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

#include "hadamaq/error.h"

namespace hadamaq {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kNonSquare: return "NonSquare";
    case Errc::kNotHadamard: return "NotHadamard";
    case Errc::kUnknownName: return "UnknownName";
    case Errc::kInvalidParameter: return "InvalidParameter";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kShapeMismatch: return "ShapeMismatch";
    case Errc::kNotPartitionOfUnity: return "NotPartitionOfUnity";
    case Errc::kNotRankOne: return "NotRankOne";
    case Errc::kNotMagic: return "NotMagic";
    case Errc::kNotNormalized: return "NotNormalized";
    case Errc::kNotComposable: return "NotComposable";
    case Errc::kCapExceeded: return "CapExceeded";
    case Errc::kNotAbelian: return "NotAbelian";
    case Errc::kInfiniteCase: return "InfiniteCase";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace hadamaq
