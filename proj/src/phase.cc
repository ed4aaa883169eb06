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

#include "hadamaq/phase.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>

#include "hadamaq/error.h"

namespace hadamaq {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Wrap an angle difference into (-pi, pi].
double wrap(double a) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  a = std::fmod(a, kTwoPi);
  if (a > std::numbers::pi) a -= kTwoPi;
  if (a <= -std::numbers::pi) a += kTwoPi;
  return a;
}

}  // namespace

std::int64_t lcm_order(std::int64_t a, std::int64_t b) {
  return std::lcm(a, b);
}

Phase Phase::exact(std::int64_t k, std::int64_t l) {
  if (l <= 0) {
    throw Error(Errc::kInvalidParameter, "root of unity order must be positive");
  }
  Phase p;
  k = mod(k, l);
  if (k == 0) return p;
  const std::int64_t g = std::gcd(k, l);
  p.k_ = k / g;
  p.l_ = l / g;
  return p;
}

Phase Phase::approx(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im) ||
      std::abs(re * re + im * im - 1.0) > kDefaultTol) {
    throw Error(Errc::kInvalidParameter, "phase is not on the unit circle");
  }
  Phase p;
  p.exact_ = false;
  p.re_ = re;
  p.im_ = im;
  return p;
}

Phase Phase::approx(std::complex<double> z) { return approx(z.real(), z.imag()); }

std::complex<double> Phase::value() const {
  if (!exact_) return {re_, im_};
  if (k_ == 0) return {1.0, 0.0};
  // Exact quarter turns avoid cos(pi/2) noise.
  if (l_ == 2) return {-1.0, 0.0};
  if (l_ == 4) return {0.0, k_ == 1 ? 1.0 : -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k_) /
                       static_cast<double>(l_);
  return {std::cos(angle), std::sin(angle)};
}

Phase Phase::conj() const {
  if (exact_) return exact(-k_, l_);
  Phase p = *this;
  p.im_ = -im_;
  return p;
}

bool operator==(const Phase& a, const Phase& b) {
  if (a.exact_ != b.exact_) return false;
  if (a.exact_) return a.k_ == b.k_ && a.l_ == b.l_;
  return a.re_ == b.re_ && a.im_ == b.im_;
}

std::string Phase::to_string() const {
  char buf[64];
  if (exact_) {
    std::snprintf(buf, sizeof buf, "Exact(%lld,%lld)", static_cast<long long>(k_),
                  static_cast<long long>(l_));
  } else {
    std::snprintf(buf, sizeof buf, "Approx(%.17g,%.17g)", re_, im_);
  }
  return buf;
}

namespace {

Phase approx_normalized(std::complex<double> z) {
  const double r = std::abs(z);
  return Phase::approx(z / r);
}

}  // namespace

Phase phase_mul(const Phase& a, const Phase& b) {
  if (a.is_exact() && b.is_exact()) {
    const std::int64_t l = std::lcm(a.order(), b.order());
    return Phase::exact(a.numerator() * (l / a.order()) +
                            b.numerator() * (l / b.order()),
                        l);
  }
  return approx_normalized(a.value() * b.value());
}

Phase phase_quot(const Phase& a, const Phase& b) { return phase_mul(a, b.conj()); }

Phase phase_pow(const Phase& a, std::int64_t e) {
  if (a.is_exact()) {
    return Phase::exact(mod(a.numerator() * mod(e, a.order()), a.order()), a.order());
  }
  return approx_normalized(std::pow(a.value(), static_cast<double>(e)));
}

double phase_distance(const Phase& a, const Phase& b) {
  return std::abs(a.value() - b.value());
}

std::optional<Phase> snap_to_root(const Phase& a, int max_order, double tol) {
  if (max_order < 1) {
    throw Error(Errc::kInvalidParameter, "max_order must be at least 1");
  }
  if (a.is_exact() && a.order() <= max_order) return a;
  const std::complex<double> z = a.value();
  const double theta = std::atan2(z.imag(), z.real());
  double best = std::numeric_limits<double>::infinity();
  std::int64_t best_k = 0;
  std::int64_t best_l = 1;
  for (std::int64_t l = 1; l <= max_order; ++l) {
    const double scaled = theta * static_cast<double>(l) / (2.0 * std::numbers::pi);
    const auto k = static_cast<std::int64_t>(std::llround(scaled));
    const double d = std::abs(
        wrap(theta - 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(l)));
    // Strict comparison keeps the smallest order on ties.
    if (d < best) {
      best = d;
      best_k = k;
      best_l = l;
    }
  }
  if (best > tol) return std::nullopt;
  return Phase::exact(best_k, best_l);
}

std::optional<Phase> vec_equal_mod_scalar(std::span<const Phase> v,
                                          std::span<const Phase> w, double tol) {
  if (v.size() != w.size()) {
    throw Error(Errc::kDimensionMismatch, "vectors differ in length");
  }
  if (v.empty()) return Phase::one();
  const Phase lambda = phase_quot(v[0], w[0]);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Phase scaled = phase_mul(lambda, w[i]);
    if (scaled.is_exact() && v[i].is_exact()) {
      if (!(scaled == v[i])) return std::nullopt;
    } else if (phase_distance(scaled, v[i]) > tol) {
      return std::nullopt;
    }
  }
  return lambda;
}

UnitVector vec_mul(std::span<const Phase> v, std::span<const Phase> w) {
  if (v.size() != w.size()) {
    throw Error(Errc::kDimensionMismatch, "vectors differ in length");
  }
  UnitVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = phase_mul(v[i], w[i]);
  return out;
}

UnitVector vec_quot(std::span<const Phase> v, std::span<const Phase> w) {
  if (v.size() != w.size()) {
    throw Error(Errc::kDimensionMismatch, "vectors differ in length");
  }
  UnitVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = phase_quot(v[i], w[i]);
  return out;
}

}  // namespace hadamaq
