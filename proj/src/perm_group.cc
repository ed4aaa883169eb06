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

#include "hadamaq/perm_group.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "hadamaq/error.h"

namespace hadamaq {

Monomial::Monomial(std::vector<int> cols, std::vector<Phase> phases)
    : cols_(std::move(cols)), phases_(std::move(phases)) {
  if (cols_.size() != phases_.size()) {
    throw Error(Errc::kInvalidParameter, "monomial needs one phase per row");
  }
  Permutation check(cols_);  // throws on a non-bijection
  for (const Phase& p : phases_) {
    if (!p.is_exact()) {
      throw Error(Errc::kInvalidParameter, "monomial phases must be exact");
    }
  }
}

Monomial Monomial::identity(int n) {
  return permutation(Permutation::identity(n));
}

Monomial Monomial::diagonal(std::vector<Phase> d) {
  std::vector<int> cols(d.size());
  std::iota(cols.begin(), cols.end(), 0);
  return Monomial(std::move(cols), std::move(d));
}

Monomial Monomial::permutation(const Permutation& p) {
  return Monomial(p.images(), std::vector<Phase>(p.degree(), Phase::one()));
}

Monomial Monomial::inverse() const {
  Monomial inv;
  inv.cols_.resize(cols_.size());
  inv.phases_.resize(phases_.size());
  for (int i = 0; i < degree(); ++i) {
    inv.cols_[cols_[i]] = i;
    inv.phases_[cols_[i]] = phases_[i].conj();
  }
  return inv;
}

bool Monomial::is_scalar() const {
  for (int i = 0; i < degree(); ++i) {
    if (cols_[i] != i || !(phases_[i] == phases_[0])) return false;
  }
  return true;
}

Monomial Monomial::scaled(const Phase& c) const {
  Monomial out = *this;
  for (Phase& p : out.phases_) p = p * c;
  return out;
}

CMatrix Monomial::to_dense() const {
  CMatrix m = CMatrix::Zero(degree(), degree());
  for (int i = 0; i < degree(); ++i) m(i, cols_[i]) = phases_[i].value();
  return m;
}

std::string Monomial::to_string() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ", ";
    out += std::to_string(cols_[i]) + ":" + phases_[i].to_string();
  }
  return out + "]";
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) {
    throw Error(Errc::kNotComposable, "monomials of different degree");
  }
  std::vector<int> cols(a.degree());
  std::vector<Phase> phases(a.degree());
  for (int i = 0; i < a.degree(); ++i) {
    const int j = a.cols()[i];
    cols[i] = b.cols()[j];
    phases[i] = a.phases()[i] * b.phases()[j];
  }
  return Monomial(std::move(cols), std::move(phases));
}

Monomial power(const Monomial& a, int e) {
  Monomial base = e < 0 ? a.inverse() : a;
  e = std::abs(e);
  Monomial out = Monomial::identity(a.degree());
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

int GroupElement::degree() const {
  if (const auto* p = permutation()) return p->degree();
  return monomial()->degree();
}

GroupElement GroupElement::inverse() const {
  if (const auto* p = permutation()) return p->inverse();
  return monomial()->inverse();
}

GroupElement GroupElement::identity_like() const {
  if (is_permutation()) return Permutation::identity(degree());
  return Monomial::identity(degree());
}

bool GroupElement::is_identity() const {
  if (const auto* p = permutation()) return p->is_identity();
  return *monomial() == Monomial::identity(degree());
}

std::size_t GroupElement::hash() const {
  std::size_t h = is_permutation() ? 0x9e3779b97f4a7c15ULL : 0x85ebca6bULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  if (const auto* p = permutation()) {
    for (int x : p->images()) mix(static_cast<std::size_t>(x));
  } else {
    const Monomial& m = *monomial();
    for (int i = 0; i < m.degree(); ++i) {
      mix(static_cast<std::size_t>(m.cols()[i]));
      mix(static_cast<std::size_t>(m.phases()[i].numerator()));
      mix(static_cast<std::size_t>(m.phases()[i].order()));
    }
  }
  return h;
}

std::string GroupElement::to_string() const {
  if (const auto* p = permutation()) return p->cycles();
  return monomial()->to_string();
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.is_permutation() != b.is_permutation()) {
    throw Error(Errc::kNotComposable, "cannot compose a permutation with a monomial");
  }
  if (a.is_permutation()) return *a.permutation() * *b.permutation();
  return *a.monomial() * *b.monomial();
}

FiniteGroup::FiniteGroup(std::vector<GroupElement> generators,
                         std::vector<GroupElement> elements)
    : generators_(std::move(generators)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);
}

std::optional<std::size_t> FiniteGroup::index_of(const GroupElement& g) const {
  const auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiniteGroup generate(std::span<const GroupElement> gens, std::size_t cap) {
  if (gens.empty()) throw Error(Errc::kInvalidParameter, "no generators given");
  std::vector<GroupElement> elements{gens.front().identity_like()};
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> seen;
  seen.emplace(elements.front(), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const GroupElement& g : gens) {
      GroupElement next = elements[head] * g;
      if (seen.count(next)) continue;
      if (elements.size() >= cap) {
        throw Error(Errc::kCapExceeded,
                    "closure exceeds " + std::to_string(cap) + " elements");
      }
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  return FiniteGroup({gens.begin(), gens.end()}, std::move(elements));
}

FiniteGroup generate(std::initializer_list<GroupElement> gens, std::size_t cap) {
  return generate(std::span<const GroupElement>(gens.begin(), gens.size()), cap);
}

int element_order(const GroupElement& g, int cap) {
  GroupElement x = g;
  for (int k = 1; k <= cap; ++k) {
    if (x.is_identity()) return k;
    x = x * g;
  }
  throw Error(Errc::kCapExceeded, "element order exceeds cap");
}

namespace {

std::string join_factors(const std::vector<int>& f) {
  std::string out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    out += (k ? " x Z_" : "Z_") + std::to_string(f[k]);
  }
  return out;
}

std::vector<int> all_orders(const FiniteGroup& g) {
  std::vector<int> orders;
  orders.reserve(g.order());
  for (const GroupElement& x : g.elements()) orders.push_back(element_order(x));
  return orders;
}

std::vector<int> prime_factors(long long n) {
  std::vector<int> primes;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    primes.push_back(static_cast<int>(p));
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(static_cast<int>(n));
  return primes;
}

long long factorial(int k) {
  long long f = 1;
  for (int t = 2; t <= k; ++t) f *= t;
  return f;
}

// Orders of all elements of S_k, summed over cycle types.
std::map<int, long long> symmetric_order_counts(int k) {
  std::map<int, long long> counts;
  std::vector<int> parts;
  std::function<void(int, int)> walk = [&](int remaining, int max_part) {
    if (remaining == 0) {
      long long denom = 1;
      int order = 1;
      std::map<int, int> mult;
      for (int p : parts) {
        ++mult[p];
        order = std::lcm(order, p);
      }
      for (const auto& [part, m] : mult) {
        for (int t = 0; t < m; ++t) denom *= part;
        denom *= factorial(m);
      }
      counts[order] += factorial(k) / denom;
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      walk(remaining - p, p);
      parts.pop_back();
    }
  };
  walk(k, k);
  return counts;
}

std::vector<std::size_t> cyclic_span(const FiniteGroup& g, std::size_t r) {
  std::vector<std::size_t> span{0};
  GroupElement x = g.elements()[r];
  while (!x.is_identity()) {
    span.push_back(*g.index_of(x));
    x = x * g.elements()[r];
  }
  std::sort(span.begin(), span.end());
  return span;
}

}  // namespace

std::string GroupLabel::text() const {
  switch (family) {
    case Family::kCyclic: return "cyclic(" + std::to_string(params.at(0)) + ")";
    case Family::kAbelian: return join_factors(params);
    case Family::kDihedral: return "dihedral(" + std::to_string(params.at(0)) + ")";
    case Family::kSemidirectZ4: return "Z_" + std::to_string(params.at(0)) + " x| Z_4";
    case Family::kSymmetric: return "symmetric(" + std::to_string(params.at(0)) + ")";
    case Family::kUnrecognized: return "unrecognized";
  }
  return "unrecognized";
}

std::vector<std::size_t> center(const FiniteGroup& g) {
  std::vector<std::size_t> z;
  for (std::size_t k = 0; k < g.order(); ++k) {
    const GroupElement& x = g.elements()[k];
    const bool central = std::all_of(
        g.generators().begin(), g.generators().end(),
        [&x](const GroupElement& s) { return x * s == s * x; });
    if (central) z.push_back(k);
  }
  return z;
}

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (!(gens[a] * gens[b] == gens[b] * gens[a])) return false;
    }
  }
  return true;
}

std::vector<int> invariant_factors_from_orders(std::span<const int> element_orders) {
  const long long n = static_cast<long long>(element_orders.size());
  // For each prime p, |G[p^e]| = p^{sum_i min(e, a_i)} where the a_i are the
  // exponents of the cyclic p-factors; successive ratios count the factors
  // with exponent >= e.
  std::vector<std::vector<int>> prime_powers;  // per prime, descending p^{a_i}
  for (int p : prime_factors(n)) {
    std::vector<int> at_least;  // at_least[e-1] = #factors with exponent >= e
    long long prev = 1;
    long long pe = 1;
    while (true) {
      pe *= p;
      long long count = 0;
      for (int o : element_orders) count += (pe % o == 0) ? 1 : 0;
      if (count == prev) break;
      int k = 0;
      for (long long c = count / prev; c > 1; c /= p) ++k;
      at_least.push_back(k);
      prev = count;
    }
    std::vector<int> powers;
    const int factors = at_least.empty() ? 0 : at_least.front();
    for (int f = 0; f < factors; ++f) {
      int power = 1;
      for (std::size_t e = 0; e < at_least.size(); ++e) {
        if (at_least[e] > f) power *= p;
      }
      powers.push_back(power);
    }
    prime_powers.push_back(std::move(powers));
  }
  std::size_t k = 0;
  for (const auto& pw : prime_powers) k = std::max(k, pw.size());
  std::vector<int> factors(k, 1);
  for (const auto& pw : prime_powers) {
    // Largest prime powers go into the last (largest) invariant factor.
    for (std::size_t f = 0; f < pw.size(); ++f) factors[k - 1 - f] *= pw[f];
  }
  return factors;
}

std::vector<int> invariant_factors(const FiniteGroup& g) {
  if (!is_abelian(g)) throw Error(Errc::kNotAbelian, "group is not abelian");
  const std::vector<int> orders = all_orders(g);
  return invariant_factors_from_orders(orders);
}

std::optional<DihedralWitness> find_dihedral_presentation(const FiniteGroup& g, int m) {
  if (m < 1 || g.order() != 2 * static_cast<std::size_t>(m)) return std::nullopt;
  const std::vector<int> orders = all_orders(g);
  for (std::size_t r = 0; r < g.order(); ++r) {
    if (orders[r] != m) continue;
    const GroupElement& rx = g.elements()[r];
    const GroupElement r_inv = rx.inverse();
    const auto span = cyclic_span(g, r);
    for (std::size_t s = 0; s < g.order(); ++s) {
      if (orders[s] != 2) continue;
      if (std::binary_search(span.begin(), span.end(), s)) continue;
      const GroupElement& sx = g.elements()[s];
      if (sx * rx * sx == r_inv) return DihedralWitness{r, s};
    }
  }
  return std::nullopt;
}

std::optional<SemidirectWitness> find_semidirect_z4_presentation(const FiniteGroup& g, int m) {
  if (m < 1 || g.order() != 4 * static_cast<std::size_t>(m)) return std::nullopt;
  const std::vector<int> orders = all_orders(g);
  for (std::size_t r = 0; r < g.order(); ++r) {
    if (orders[r] != m) continue;
    const GroupElement& rx = g.elements()[r];
    const GroupElement r_inv = rx.inverse();
    const auto span = cyclic_span(g, r);
    for (std::size_t s = 0; s < g.order(); ++s) {
      if (orders[s] != 4) continue;
      const GroupElement& sx = g.elements()[s];
      const GroupElement conj = sx * rx * sx.inverse();
      if (!(conj == rx) && !(conj == r_inv)) continue;
      // <s> meets <r> trivially iff s^2 does not lie in <r>.
      const std::size_t s2 = *g.index_of(sx * sx);
      if (std::binary_search(span.begin(), span.end(), s2)) continue;
      return SemidirectWitness{r, s};
    }
  }
  return std::nullopt;
}

namespace {

bool matches_symmetric(const FiniteGroup& g, const std::vector<int>& orders,
                       std::size_t center_order, int& k_out) {
  int k = 3;
  while (factorial(k) < static_cast<long long>(g.order())) ++k;
  if (factorial(k) != static_cast<long long>(g.order())) return false;
  k_out = k;
  const bool degree_k_perms = std::all_of(
      g.elements().begin(), g.elements().end(),
      [k](const GroupElement& x) { return x.is_permutation() && x.degree() == k; });
  if (degree_k_perms) return true;
  if (center_order != 1) return false;
  std::map<int, long long> counts;
  for (int o : orders) ++counts[o];
  return counts == symmetric_order_counts(k);
}

}  // namespace

GroupLabel match_named(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > kMatchNamedLimit) return {};
  const std::vector<int> orders = all_orders(g);
  if (std::find(orders.begin(), orders.end(), static_cast<int>(n)) != orders.end()) {
    return {Family::kCyclic, {static_cast<int>(n)}};
  }
  if (is_abelian(g)) return {Family::kAbelian, invariant_factors_from_orders(orders)};
  if (n % 2 == 0 && find_dihedral_presentation(g, static_cast<int>(n / 2))) {
    return {Family::kDihedral, {static_cast<int>(n)}};
  }
  if (n % 4 == 0 && find_semidirect_z4_presentation(g, static_cast<int>(n / 4))) {
    return {Family::kSemidirectZ4, {static_cast<int>(n / 4)}};
  }
  int k = 0;
  if (matches_symmetric(g, orders, center(g).size(), k)) return {Family::kSymmetric, {k}};
  return {};
}

GroupFingerprint fingerprint(const FiniteGroup& g) {
  GroupFingerprint fp;
  fp.order = g.order();
  fp.abelian = is_abelian(g);
  fp.element_orders = all_orders(g);
  std::sort(fp.element_orders.begin(), fp.element_orders.end());
  fp.center_order = center(g).size();
  fp.label = match_named(g);
  return fp;
}

std::size_t scalar_subgroup_order(const FiniteGroup& g) {
  std::size_t count = 0;
  for (const GroupElement& x : g.elements()) {
    if (x.is_permutation()) {
      count += x.is_identity() ? 1 : 0;
    } else if (x.monomial()->is_scalar()) {
      ++count;
    }
  }
  return count;
}

}  // namespace hadamaq
