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

#include "hadamaq/mq_family.h"

#include "hadamaq/error.h"
#include "hadamaq/magic_unitary.h"

namespace hadamaq {

const char* mq_case_name(MqCaseId id) {
  switch (id) {
    case MqCaseId::kS0: return "s0";
    case MqCaseId::kS1: return "s1";
    case MqCaseId::kS2Plus: return "s2plus";
    case MqCaseId::kInfinite: return "infinite";
  }
  return "unknown";
}

MqCase classify(const Phase& q, int max_order) {
  MqCase c;
  c.q = q;
  const auto exact = q.is_exact() ? std::optional<Phase>(q) : snap_to_root(q, max_order, kDefaultTol);
  if (!exact) return c;
  c.q = *exact;
  const int n = static_cast<int>((*exact * *exact).order());
  c.n = n;
  c.m = n;
  while (c.m % 2 == 0) {
    c.m /= 2;
    ++c.s;
  }
  c.id = c.s == 0 ? MqCaseId::kS0 : c.s == 1 ? MqCaseId::kS1 : MqCaseId::kS2Plus;
  return c;
}

std::optional<int> MqGroupLabel::order() const {
  if (!param) return std::nullopt;
  return family == MqFamily::kDihedral ? 2 * *param : 4 * *param;
}

std::string MqGroupLabel::text() const {
  switch (family) {
    case MqFamily::kDihedral: return "Z_" + std::to_string(*param) + " x| Z_2";
    case MqFamily::kSemidirectZ4: return "Z_" + std::to_string(*param) + " x| Z_4";
    case MqFamily::kInfiniteDihedral: return "Z x| Z_2";
  }
  return "";
}

MqGroupLabel predicted_group(const MqCase& c) {
  switch (c.id) {
    case MqCaseId::kS0: return {MqFamily::kDihedral, 2 * *c.n};
    case MqCaseId::kS1: return {MqFamily::kSemidirectZ4, *c.n / 2};
    case MqCaseId::kS2Plus: return {MqFamily::kSemidirectZ4, *c.n};
    case MqCaseId::kInfinite: return {MqFamily::kInfiniteDihedral, std::nullopt};
  }
  return {};
}

Monomial mq_alpha() { return Monomial::permutation(Permutation({1, 0, 3, 2})); }
Monomial mq_beta() { return Monomial::permutation(Permutation({2, 3, 0, 1})); }
Monomial mq_gamma() { return Monomial::permutation(Permutation({3, 2, 1, 0})); }
Monomial mq_delta() { return Monomial::permutation(Permutation({1, 2, 3, 0})); }

Monomial mq_sigma(const Phase& q) {
  return Monomial({2, 3, 0, 1}, {q, q.conj(), q, q.conj()});
}

Monomial mq_tau(const Phase& q) {
  const Phase minus_q = Phase::exact(1, 2) * q;
  return Monomial::diagonal({minus_q, q.conj(), minus_q, q.conj()});
}

namespace {

void require_finite(const MqCase& c) {
  if (c.id == MqCaseId::kInfinite) {
    throw Error(Errc::kInfiniteCase, "q^2 has infinite order");
  }
}

}  // namespace

MqGenerators generators(const MqCase& c) {
  require_finite(c);
  const int n = *c.n;
  const Phase minus = Phase::exact(1, 2);
  MqGenerators g;
  g.q_used = c.q;
  switch (c.id) {
    case MqCaseId::kS0:
      // q^{2n} = 1 gives q^n = +-1; use -q when q^n = -1.
      if (!(phase_pow(c.q, n) == Phase::one())) {
        g.q_used = minus * c.q;
        g.q_negated = true;
      }
      g.gens = {mq_alpha(), mq_sigma(g.q_used)};
      g.names = {"alpha", "sigma"};
      break;
    case MqCaseId::kS1: {
      const Phase minus_i = Phase::exact(3, 4);
      if (!(phase_pow(minus_i * c.q, n / 2) == Phase::one())) {
        g.q_used = minus * c.q;
        g.q_negated = true;
      }
      g.gens = {mq_delta(), mq_tau(g.q_used).scaled(Phase::exact(1, 4))};
      g.names = {"delta", "nu"};
      break;
    }
    case MqCaseId::kS2Plus:
      g.gens = {mq_delta(), mq_tau(c.q).scaled(Phase::exact(1, 2 * n))};
      g.names = {"delta", "w_tau"};
      break;
    case MqCaseId::kInfinite:
      break;
  }
  return g;
}

RealizedGroup realized_group(const MqCase& c, std::size_t cap) {
  require_finite(c);
  RealizedGroup out;
  out.gens = generators(c);
  out.predicted = predicted_group(c);
  std::vector<GroupElement> gens(out.gens.gens.begin(), out.gens.gens.end());
  const FiniteGroup g = generate(gens, cap);
  out.fingerprint = fingerprint(g);
  out.order_matches_prediction =
      static_cast<int>(g.order()) == out.predicted.order().value();
  const int a = *out.predicted.param;
  out.presentation_confirmed = out.predicted.family == MqFamily::kDihedral
                                   ? find_dihedral_presentation(g, a).has_value()
                                   : find_semidirect_z4_presentation(g, a).has_value();
  out.scalar_order = scalar_subgroup_order(g);
  out.projective_order = g.order() / out.scalar_order;
  return out;
}

FactorizationCheck factorization_check(const MqCase& c, int k, int sign) {
  require_finite(c);
  const int n = *c.n;
  if (k < 0 || k >= 2 * n) {
    throw Error(Errc::kIndexOutOfRange, "k must satisfy 0 <= k < 2n");
  }
  if (sign != 1 && sign != -1) {
    throw Error(Errc::kInvalidParameter, "sign must be +1 or -1");
  }
  const MqGenerators g = generators(c);
  const Phase q = g.q_used;
  const Phase minus = Phase::exact(1, 2);
  const Phase pm = sign > 0 ? Phase::one() : minus;
  const Phase parity = phase_pow(minus, k);

  CVector rho(4);
  rho << 1.0, (pm * phase_pow(q, k)).value(), parity.value(),
      (pm * phase_pow(minus * q, k)).value();
  const CMatrix projection = rho * rho.adjoint() / 4.0;

  const CMatrix id = CMatrix::Identity(4, 4);
  const std::complex<double> par = parity.value();
  const double s = sign;
  CMatrix product;
  if (c.id == MqCaseId::kS0) {
    const Monomial sigma = mq_sigma(q);
    const CMatrix left = id + par * power(sigma, n).to_dense();
    const CMatrix right = id + s * par * (mq_alpha() * power(sigma, k)).to_dense();
    product = left * right / 4.0;
  } else {
    const Monomial delta = mq_delta();
    const CMatrix left = id + par * power(delta, 2).to_dense();
    const CMatrix right = id + s * (delta * power(mq_tau(q), k)).to_dense();
    product = left * right / 4.0;
  }
  const double residual = (projection - product).norm();
  return {residual <= kFactorizationTol, residual};
}

}  // namespace hadamaq
