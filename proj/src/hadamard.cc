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

#include "hadamaq/hadamard.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hadamaq/error.h"

namespace hadamaq {

PhaseMatrix PhaseMatrix::from_rows(const std::vector<std::vector<Phase>>& rows) {
  const int n = static_cast<int>(rows.size());
  PhaseMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw Error(Errc::kNonSquare, "row " + std::to_string(i) + " has " +
                                        std::to_string(rows[i].size()) +
                                        " entries, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool PhaseMatrix::all_exact() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Phase& p) { return p.is_exact(); });
}

namespace {

template <typename Entry>
double gram_residual(int n, Entry entry) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      std::complex<double> s = 0.0;
      for (int k = 0; k < n; ++k) s += entry(i, k) * std::conj(entry(j, k));
      const double r = (i == j) ? std::abs(s - static_cast<double>(n)) : std::abs(s);
      worst = std::max(worst, r / n);
    }
  }
  return worst;
}

}  // namespace

ValidationReport validate(const PhaseMatrix& m, double tol) {
  ValidationReport report;
  const int n = m.size();
  report.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(std::abs(m(i, j).value()) - 1.0) > tol) {
        report.non_unit_entries.emplace_back(i, j);
      }
    }
  }
  report.unit_modulus = report.non_unit_entries.empty();
  report.row_residual =
      gram_residual(n, [&](int i, int k) { return m(i, k).value(); });
  report.col_residual =
      gram_residual(n, [&](int j, int k) { return m(k, j).value(); });
  report.hadamard = n > 0 && report.unit_modulus && report.row_residual <= tol &&
                    report.col_residual <= tol;
  return report;
}

ValidationReport validate(const std::vector<std::vector<Phase>>& rows, double tol) {
  return validate(PhaseMatrix::from_rows(rows), tol);
}

HadamardMatrix::HadamardMatrix(PhaseMatrix entries, double tol)
    : entries_(std::move(entries)) {
  const ValidationReport report = validate(entries_, tol);
  if (!report.hadamard) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "not a Hadamard matrix (n=%d, row residual %.3g, %zu non-unit entries)",
                  report.n, report.row_residual, report.non_unit_entries.size());
    throw Error(Errc::kNotHadamard, buf);
  }
}

EquivalenceWitness EquivalenceWitness::identity(int n) {
  EquivalenceWitness w;
  w.row_perm.resize(n);
  w.col_perm.resize(n);
  std::iota(w.row_perm.begin(), w.row_perm.end(), 0);
  std::iota(w.col_perm.begin(), w.col_perm.end(), 0);
  w.row_phases.assign(n, Phase::one());
  w.col_phases.assign(n, Phase::one());
  return w;
}

bool EquivalenceWitness::is_identity() const {
  return *this == identity(size());
}

EquivalenceWitness random_witness(int n, std::uint64_t seed, int phase_order) {
  std::mt19937_64 rng(seed);
  EquivalenceWitness w = EquivalenceWitness::identity(n);
  std::shuffle(w.row_perm.begin(), w.row_perm.end(), rng);
  std::shuffle(w.col_perm.begin(), w.col_perm.end(), rng);
  std::uniform_int_distribution<int> pick(0, phase_order - 1);
  for (auto& p : w.row_phases) p = Phase::exact(pick(rng), phase_order);
  for (auto& p : w.col_phases) p = Phase::exact(pick(rng), phase_order);
  return w;
}

PhaseMatrix apply_equivalence(const PhaseMatrix& m, const EquivalenceWitness& w) {
  const int n = m.size();
  if (w.size() != n || static_cast<int>(w.col_perm.size()) != n ||
      static_cast<int>(w.row_phases.size()) != n ||
      static_cast<int>(w.col_phases.size()) != n) {
    throw Error(Errc::kDimensionMismatch, "witness size does not match matrix size");
  }
  PhaseMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out(i, j) = w.row_phases[i] * w.col_phases[j] * m(w.row_perm[i], w.col_perm[j]);
    }
  }
  return out;
}

HadamardMatrix apply_equivalence(const HadamardMatrix& h, const EquivalenceWitness& w) {
  return HadamardMatrix(apply_equivalence(h.entries(), w));
}

EquivalenceWitness compose(const EquivalenceWitness& a, const EquivalenceWitness& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::kDimensionMismatch, "witness sizes differ");
  }
  const int n = a.size();
  EquivalenceWitness c = EquivalenceWitness::identity(n);
  for (int i = 0; i < n; ++i) {
    c.row_perm[i] = a.row_perm[b.row_perm[i]];
    c.col_perm[i] = a.col_perm[b.col_perm[i]];
    c.row_phases[i] = b.row_phases[i] * a.row_phases[b.row_perm[i]];
    c.col_phases[i] = b.col_phases[i] * a.col_phases[b.col_perm[i]];
  }
  return c;
}

HadamardMatrix fourier(int n) {
  if (n < 1) throw Error(Errc::kInvalidParameter, "fourier size must be positive");
  PhaseMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Phase::exact(static_cast<std::int64_t>(i) * j, n);
  }
  return HadamardMatrix(std::move(m));
}

HadamardMatrix fourier_one_based(int n) {
  EquivalenceWitness w = EquivalenceWitness::identity(n);
  for (int i = 0; i < n; ++i) {
    w.row_phases[i] = Phase::exact(i + 1, n);
    w.col_phases[i] = Phase::exact(i, n);
  }
  return apply_equivalence(fourier(n), w);
}

HadamardMatrix mq(const Phase& q) {
  const Phase one = Phase::one();
  const Phase minus = Phase::exact(1, 2);
  const Phase neg_q = minus * q;
  return HadamardMatrix(PhaseMatrix::from_rows({
      {one, one, one, one},
      {one, q, minus, neg_q},
      {one, minus, one, minus},
      {one, neg_q, minus, q},
  }));
}

HadamardMatrix haagerup() {
  const Phase o = Phase::one();
  const Phase m = Phase::exact(1, 2);
  const Phase i = Phase::exact(1, 4);
  return HadamardMatrix(PhaseMatrix::from_rows({
      {i, o, o, o, o, o},
      {o, i, o, m, m, o},
      {o, o, i, o, m, m},
      {o, m, o, i, o, m},
      {o, m, m, o, i, o},
      {o, o, m, m, o, i},
  }));
}

HadamardMatrix tao() {
  const Phase o = Phase::one();
  const Phase w = Phase::exact(1, 3);
  const Phase v = Phase::exact(2, 3);
  return HadamardMatrix(PhaseMatrix::from_rows({
      {o, o, o, o, o, o},
      {o, o, w, w, v, v},
      {o, w, o, v, v, w},
      {o, w, v, o, w, v},
      {o, v, v, w, o, w},
      {o, v, w, v, w, o},
  }));
}

HadamardMatrix sylvester(int s) {
  if (s < 0) throw Error(Errc::kInvalidParameter, "sylvester power must be non-negative");
  HadamardMatrix h = fourier(1);
  for (int t = 0; t < s; ++t) h = tensor(h, fourier(2));
  return h;
}

Phase parse_root(const std::string& text) {
  if (text == "1") return Phase::one();
  if (text == "-1") return Phase::exact(1, 2);
  if (text == "i") return Phase::exact(1, 4);
  if (text == "-i") return Phase::exact(3, 4);
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw Error(Errc::kInvalidParameter, "expected k/l, got '" + text + "'");
  }
  try {
    std::size_t used_k = 0;
    std::size_t used_l = 0;
    const std::string ks = text.substr(0, slash);
    const std::string ls = text.substr(slash + 1);
    const long long k = std::stoll(ks, &used_k);
    const long long l = std::stoll(ls, &used_l);
    if (used_k != ks.size() || used_l != ls.size() || l <= 0) {
      throw Error(Errc::kInvalidParameter, "expected k/l, got '" + text + "'");
    }
    return Phase::exact(k, l);
  } catch (const std::logic_error&) {
    throw Error(Errc::kInvalidParameter, "expected k/l, got '" + text + "'");
  }
}

namespace {

int parse_positive(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size() && v >= 0) return v;
  } catch (const std::logic_error&) {
  }
  throw Error(Errc::kInvalidParameter, "bad parameter for " + what + ": '" + text + "'");
}

HadamardMatrix catalogue_single(const std::string& input) {
  const auto colon = input.find(':');
  const std::string name = input.substr(0, colon);
  const std::string param = colon == std::string::npos ? "" : input.substr(colon + 1);
  const bool has_param = colon != std::string::npos;
  if (name == "fourier" && has_param) return fourier(parse_positive(param, name));
  if (name == "sylvester" && has_param) return sylvester(parse_positive(param, name));
  if (name == "mq" && has_param) return mq(parse_root(param));
  if (name == "haagerup" && !has_param) return haagerup();
  if (name == "tao" && !has_param) return tao();
  throw Error(Errc::kUnknownName, "unknown catalogue matrix '" + input + "'");
}

}  // namespace

HadamardMatrix catalogue(const std::string& input) {
  if (input.empty()) throw Error(Errc::kUnknownName, "empty catalogue name");
  std::optional<HadamardMatrix> result;
  std::size_t start = 0;
  while (true) {
    const auto star = input.find('*', start);
    const std::string part = input.substr(start, star - start);
    HadamardMatrix factor = catalogue_single(part);
    result = result ? tensor(*result, factor) : factor;
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return *result;
}

std::vector<std::string> catalogue_names() {
  return {"fourier:<n>", "mq:<k/l|1|-1|i|-i>", "haagerup", "tao", "sylvester:<s>",
          "<name>*<name>"};
}

namespace {

bool is_one(const Phase& p, double tol) {
  if (p.is_exact()) return p == Phase::one();
  return phase_distance(p, Phase::one()) <= tol;
}

// Kuhn's augmenting paths on rows/columns 1..n-1 with edges where the
// border-normalized matrix holds a 1. Returns the column assigned to each row.
std::optional<std::vector<int>> diagonal_matching(const PhaseMatrix& d, double tol) {
  const int n = d.size();
  std::vector<int> row_of_col(n, -1);
  std::vector<int> col_of_row(n, -1);
  col_of_row[0] = 0;
  row_of_col[0] = 0;
  std::function<bool(int, std::vector<char>&)> augment = [&](int r, std::vector<char>& seen) {
    for (int c = 1; c < n; ++c) {
      if (seen[c] || !is_one(d(r, c), tol)) continue;
      seen[c] = 1;
      if (row_of_col[c] < 0 || augment(row_of_col[c], seen)) {
        row_of_col[c] = r;
        col_of_row[r] = c;
        return true;
      }
    }
    return false;
  };
  for (int r = 1; r < n; ++r) {
    std::vector<char> seen(n, 0);
    if (!augment(r, seen)) return std::nullopt;
  }
  return col_of_row;
}

}  // namespace

DephaseResult dephase_border(const HadamardMatrix& h) {
  const int n = h.size();
  EquivalenceWitness w = EquivalenceWitness::identity(n);
  for (int r = 0; r < n; ++r) w.row_phases[r] = h(r, 0).conj();
  for (int c = 0; c < n; ++c) w.col_phases[c] = (w.row_phases[0] * h(0, c)).conj();
  PhaseMatrix m = apply_equivalence(h.entries(), w);
  // The border is 1 by construction; store it exactly so approximate inputs
  // dephase idempotently.
  for (int k = 0; k < n; ++k) {
    m(0, k) = Phase::one();
    m(k, 0) = Phase::one();
  }
  return {HadamardMatrix(std::move(m)), std::move(w), false};
}

DephaseResult dephase(const HadamardMatrix& h, double tol) {
  DephaseResult border = dephase_border(h);
  const int n = h.size();
  const PhaseMatrix& d = border.matrix.entries();
  bool diagonal_done = true;
  for (int i = 0; i < n; ++i) diagonal_done = diagonal_done && is_one(d(i, i), tol);
  if (diagonal_done) return border;
  const auto matching = diagonal_matching(d, tol);
  if (!matching) {
    border.diagonal_incomplete = true;
    return border;
  }
  EquivalenceWitness perm = EquivalenceWitness::identity(n);
  perm.col_perm = *matching;
  PhaseMatrix m = apply_equivalence(d, perm);
  for (int i = 0; i < n; ++i) m(i, i) = Phase::one();
  return {HadamardMatrix(std::move(m)), compose(border.witness, perm), false};
}

std::optional<int> butson_level(const HadamardMatrix& h, int max_order, double tol) {
  std::int64_t level = 1;
  for (int i = 0; i < h.size(); ++i) {
    for (int j = 0; j < h.size(); ++j) {
      const auto snapped = snap_to_root(h(i, j), max_order, tol);
      if (!snapped) return std::nullopt;
      level = std::lcm(level, snapped->order());
      if (level > max_order) return std::nullopt;
    }
  }
  return static_cast<int>(level);
}

HadamardMatrix tensor(const HadamardMatrix& h, const HadamardMatrix& k) {
  const int n = h.size();
  const int m = k.size();
  PhaseMatrix out(n * m);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < m; ++a) {
      for (int j = 0; j < n; ++j) {
        for (int b = 0; b < m; ++b) out(i * m + a, j * m + b) = h(i, j) * k(a, b);
      }
    }
  }
  return HadamardMatrix(std::move(out));
}

HadamardMatrix tensor_fourier(std::span<const int> sizes) {
  HadamardMatrix h = fourier(1);
  for (int d : sizes) h = tensor(h, fourier(d));
  return h;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_chm(std::ostream& out, const HadamardMatrix& h, int max_order) {
  const int n = h.size();
  std::optional<PhaseMatrix> exact;
  if (h.mode() == Mode::kExact) {
    exact = h.entries();
  } else if (butson_level(h, max_order)) {
    PhaseMatrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = *snap_to_root(h(i, j), max_order, kDefaultTol);
    }
    exact = std::move(m);
  }
  if (exact) {
    std::int64_t order = 1;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) order = std::lcm(order, (*exact)(i, j).order());
    }
    out << "chm v1 n=" << n << " mode=exact order=" << order << "\n";
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Phase& p = (*exact)(i, j);
        out << (j ? " " : "") << p.numerator() * (order / p.order());
      }
      out << "\n";
    }
    return;
  }
  out << "chm v1 n=" << n << " mode=approx\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto z = h(i, j).value();
      out << (j ? " " : "") << format_double(z.real()) << "," << format_double(z.imag());
    }
    out << "\n";
  }
}

std::string to_chm(const HadamardMatrix& h, int max_order) {
  std::ostringstream out;
  write_chm(out, h, max_order);
  return out.str();
}

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(Errc::kParse, "chm: " + what);
}

}  // namespace

PhaseMatrix read_chm_grid(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) parse_error("missing header");
  std::istringstream hs(header);
  std::string magic;
  std::string version;
  hs >> magic >> version;
  if (magic != "chm" || version != "v1") parse_error("expected 'chm v1' header");
  int n = -1;
  std::string mode;
  long long order = -1;
  std::string token;
  while (hs >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) parse_error("bad header field '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    try {
      if (key == "n") {
        n = std::stoi(value);
      } else if (key == "mode") {
        mode = value;
      } else if (key == "order") {
        order = std::stoll(value);
      } else {
        parse_error("unknown header field '" + key + "'");
      }
    } catch (const std::logic_error&) {
      parse_error("bad header value '" + token + "'");
    }
  }
  if (n < 1) parse_error("missing or invalid n");
  if (mode != "exact" && mode != "approx") parse_error("mode must be exact or approx");
  if (mode == "exact" && order < 1) parse_error("exact mode requires order=<l>");
  PhaseMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(in >> token)) parse_error("expected " + std::to_string(n * n) + " entries");
      try {
        if (mode == "exact") {
          std::size_t used = 0;
          const long long k = std::stoll(token, &used);
          if (used != token.size()) parse_error("bad entry '" + token + "'");
          m(i, j) = Phase::exact(k, order);
        } else {
          const auto comma = token.find(',');
          if (comma == std::string::npos) parse_error("bad entry '" + token + "'");
          m(i, j) = Phase::approx(std::stod(token.substr(0, comma)),
                                  std::stod(token.substr(comma + 1)));
        }
      } catch (const Error& e) {
        if (e.code() == Errc::kParse) throw;
        parse_error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                    ") is off the unit circle");
      } catch (const std::logic_error&) {
        parse_error("bad entry '" + token + "'");
      }
    }
  }
  if (in >> token) parse_error("trailing data after " + std::to_string(n) + " rows");
  return m;
}

HadamardMatrix read_chm(std::istream& in, double tol) {
  return HadamardMatrix(read_chm_grid(in), tol);
}

HadamardMatrix parse_chm(const std::string& text, double tol) {
  std::istringstream in(text);
  return read_chm(in, tol);
}

}  // namespace hadamaq
