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

#ifndef HADAMAQ_MQ_FAMILY_H
#define HADAMAQ_MQ_FAMILY_H

#include <optional>
#include <string>
#include <vector>

#include "hadamaq/perm_group.h"
#include "hadamaq/phase.h"

namespace hadamaq {

enum class MqCaseId { kS0, kS1, kS2Plus, kInfinite };

const char* mq_case_name(MqCaseId id);

/// Parameters of the 4 x 4 matrix M_q: n is the order of q^2, written
/// n = 2^s m with m odd.
struct MqCase {
  Phase q;
  std::optional<int> n;  // nullopt: q^2 has infinite order
  int s = 0;
  int m = 0;
  MqCaseId id = MqCaseId::kInfinite;
};

/// Approximate q is snapped to a root of unity of order <= max_order
/// first; if that fails the case is infinite.
MqCase classify(const Phase& q, int max_order = kDefaultMaxOrder);

enum class MqFamily { kDihedral, kSemidirectZ4, kInfiniteDihedral };

struct MqGroupLabel {
  MqFamily family = MqFamily::kInfiniteDihedral;
  /// a in Z_a x| Z_2 or Z_a x| Z_4; unset for the infinite case.
  std::optional<int> param;

  /// 2a or 4a; nullopt for the infinite case.
  std::optional<int> order() const;
  /// "Z_6 x| Z_2", "Z_1 x| Z_4", "Z x| Z_2".
  std::string text() const;
};

/// s = 0: Z_{2n} x| Z_2; s = 1: Z_{n/2} x| Z_4; s >= 2: Z_n x| Z_4;
/// infinite: Z x| Z_2.
MqGroupLabel predicted_group(const MqCase& c);

// Fixed 4 x 4 monomial matrices.
Monomial mq_alpha();  // (0 1)(2 3)
Monomial mq_beta();   // (0 2)(1 3)
Monomial mq_gamma();  // (0 3)(1 2)
Monomial mq_delta();  // cyclic shift, row i has its 1 in column i + 1
/// Anti-diagonal-block matrix with q at (0,2), (2,0) and q^{-1} at (1,3), (3,1).
Monomial mq_sigma(const Phase& q);
/// diag(-q, q^{-1}, -q, q^{-1}).
Monomial mq_tau(const Phase& q);

struct MqGenerators {
  /// q after the sign adjustment (q or -q).
  Phase q_used;
  bool q_negated = false;
  /// {alpha, sigma} for s = 0, {delta, i tau} for s = 1, {delta, w tau} with
  /// w = e^{pi i / n} for s >= 2.
  std::vector<Monomial> gens;
  std::vector<std::string> names;
};

/// Throws Errc::kInfiniteCase.
MqGenerators generators(const MqCase& c);

struct RealizedGroup {
  GroupFingerprint fingerprint;
  MqGroupLabel predicted;
  bool order_matches_prediction = false;
  /// The dihedral (s = 0) or Z_a x| Z_4 (s >= 1) presentation with the
  /// predicted a was found in the generated group.
  bool presentation_confirmed = false;
  /// Order after dividing out scalar matrices.
  std::size_t projective_order = 0;
  std::size_t scalar_order = 0;
  MqGenerators gens;
};

/// Closes generators(c) and compares against predicted_group(c). Throws
/// Errc::kInfiniteCase or Errc::kCapExceeded.
RealizedGroup realized_group(const MqCase& c, std::size_t cap = kDefaultClosureCap);

struct FactorizationCheck {
  bool pass = false;
  double residual = 0.0;
};

inline constexpr double kFactorizationTol = 1e-10;

/// Compares the rank-one projection onto rho = (1, +-q^k, (-1)^k, +-(-q)^k)
/// with the group-algebra product
///   s = 0:  (1/4)(1 + (-1)^k sigma^n)(1 +- (-1)^k alpha sigma^k)
///   s >= 1: (1/4)(1 + (-1)^k delta^2)(1 +- delta tau^k)
/// using the adjusted q. Throws Errc::kInfiniteCase, and
/// Errc::kIndexOutOfRange unless 0 <= k < 2n.
FactorizationCheck factorization_check(const MqCase& c, int k, int sign);

}  // namespace hadamaq

#endif  // HADAMAQ_MQ_FAMILY_H
