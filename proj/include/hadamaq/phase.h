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

#ifndef HADAMAQ_PHASE_H
#define HADAMAQ_PHASE_H

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hadamaq {

/// Default tolerance for unit-modulus and proportionality checks.
inline constexpr double kDefaultTol = 1e-9;

/// Default bound on root-of-unity orders when snapping approximate entries.
inline constexpr int kDefaultMaxOrder = 48;

/// A scalar on the unit circle.
///
/// Exact phases are roots of unity e^{2 pi i k / l}, stored reduced so that
/// 0 <= k < l and gcd(k, l) = 1 (the unit is (0, 1)); equal roots therefore
/// compare equal structurally. Approximate phases carry a floating point pair
/// whose modulus is within kDefaultTol of one. Arithmetic mixing the two
/// representations yields an approximate result.
class Phase {
 public:
  /// The unit, exact.
  Phase() = default;

  /// e^{2 pi i k / l}; k may be any integer, l must be positive.
  static Phase exact(std::int64_t k, std::int64_t l);
  static Phase approx(double re, double im);
  static Phase approx(std::complex<double> z);
  static Phase one() { return Phase(); }

  bool is_exact() const { return exact_; }
  /// Numerator and order of an exact phase; meaningless for approximate ones.
  std::int64_t numerator() const { return k_; }
  std::int64_t order() const { return l_; }

  std::complex<double> value() const;
  Phase conj() const;

  /// Structural equality: exact phases compare by (k, l), approximate ones by
  /// their stored doubles, and an exact phase never equals an approximate one.
  friend bool operator==(const Phase& a, const Phase& b);

  std::string to_string() const;

 private:
  bool exact_ = true;
  std::int64_t k_ = 0;
  std::int64_t l_ = 1;
  double re_ = 1.0;
  double im_ = 0.0;
};

Phase phase_mul(const Phase& a, const Phase& b);
/// a * conj(b).
Phase phase_quot(const Phase& a, const Phase& b);

inline Phase operator*(const Phase& a, const Phase& b) { return phase_mul(a, b); }
inline Phase operator/(const Phase& a, const Phase& b) { return phase_quot(a, b); }

/// a^e for any integer e.
Phase phase_pow(const Phase& a, std::int64_t e);

/// Distance |a - b| between the complex values.
double phase_distance(const Phase& a, const Phase& b);

/// Nearest root of unity of order <= max_order, if it lies within tol
/// (angular distance, radians). nullopt means the entry is not detectably a
/// root of unity.
std::optional<Phase> snap_to_root(const Phase& a, int max_order, double tol);

using UnitVector = std::vector<Phase>;

/// lambda with v = lambda * w entrywise, lambda = v[0] / w[0]. Exact vectors
/// are compared structurally; anything else within tol per entry.
std::optional<Phase> vec_equal_mod_scalar(std::span<const Phase> v,
                                          std::span<const Phase> w,
                                          double tol = kDefaultTol);

/// Entrywise product and quotient of unit vectors of equal length.
UnitVector vec_mul(std::span<const Phase> v, std::span<const Phase> w);
UnitVector vec_quot(std::span<const Phase> v, std::span<const Phase> w);

std::int64_t lcm_order(std::int64_t a, std::int64_t b);

}  // namespace hadamaq

#endif  // HADAMAQ_PHASE_H
