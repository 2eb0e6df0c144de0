// Copyright 2026 The fqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fqg/exact.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include <mpfr.h>

#include "fqg/error.hpp"

namespace fqg {

namespace {

using Poly = std::vector<long long>;  // constant term first

// x^e mod Phi_n for every 0 <= e < n, stored sparsely.
struct ReductionTable {
  std::uint32_t n = 1;
  std::uint32_t phi = 1;
  std::vector<std::vector<std::pair<std::uint32_t, long>>> powers;
};

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic integer polynomial.
Poly divide_monic(Poly num, const Poly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {0};
  Poly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const long long c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

Poly compute_cyclotomic(std::uint32_t n) {
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_monic(p, compute_cyclotomic(d));
  }
  trim(p);
  return p;
}

std::unique_ptr<ReductionTable> build_table(std::uint32_t n) {
  auto t = std::make_unique<ReductionTable>();
  t->n = n;
  const Poly phi_poly = compute_cyclotomic(n);
  t->phi = static_cast<std::uint32_t>(phi_poly.size() - 1);
  const std::uint32_t deg = t->phi;
  std::vector<long long> cur(deg, 0);
  cur[0] = 1;
  if (deg == 0) cur.assign(1, 1);
  t->powers.resize(n);
  for (std::uint32_t e = 0; e < n; ++e) {
    auto& row = t->powers[e];
    for (std::uint32_t f = 0; f < deg; ++f) {
      if (cur[f] != 0) row.emplace_back(f, static_cast<long>(cur[f]));
    }
    // multiply by x and reduce with the monic relation
    const long long top = cur[deg - 1];
    for (std::uint32_t f = deg - 1; f > 0; --f) cur[f] = cur[f - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::uint32_t f = 0; f < deg; ++f) cur[f] -= top * phi_poly[f];
    }
  }
  return t;
}

const ReductionTable& table(std::uint32_t n) {
  thread_local std::unordered_map<std::uint32_t, const ReductionTable*> local;
  if (auto it = local.find(n); it != local.end()) return *it->second;
  static std::mutex mu;
  static std::unordered_map<std::uint32_t, std::unique_ptr<ReductionTable>> shared;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = shared[n];
  if (!slot) slot = build_table(n);
  local.emplace(n, slot.get());
  return *slot;
}

std::uint32_t lcm_u32(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(std::lcm<std::uint64_t>(a, b));
}

using CoefAcc = boost::container::small_vector<Coef, 16>;

// Adds c * x^e (0 <= e < n) into the dense accumulator of conductor n.
void accumulate(CoefAcc& acc, const ReductionTable& t,
                std::uint32_t e, const Coef& c) {
  if (e < t.phi) {
    acc[e] += c;
    return;
  }
  for (const auto& [f, m] : t.powers[e]) {
    if (m == 1) {
      acc[f] += c;
    } else if (m == -1) {
      acc[f] -= c;
    } else {
      acc[f] += c * Coef(m);
    }
  }
}

CycNum::TermList collect(CoefAcc& acc) {
  CycNum::TermList out;
  for (std::uint32_t f = 0; f < acc.size(); ++f) {
    if (!acc[f].is_zero()) out.push_back({f, std::move(acc[f])});
  }
  return out;
}

// Solves for the coordinates of `a` (conductor n) in the power basis of the
// subfield Q(zeta_d); returns false when a is not in that subfield.
bool express_in_subfield(const CycNum& a, std::uint32_t d,
                         std::vector<Rational>& coords) {
  const std::uint32_t n = a.conductor();
  const auto& tn = table(n);
  const auto& td = table(d);
  const std::uint32_t rows = tn.phi;
  const std::uint32_t cols = td.phi;
  // augmented matrix [basis images | a]
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::uint32_t f = 0; f < cols; ++f) {
    const std::uint32_t e = f * (n / d);
    for (const auto& [g, c] : tn.powers[e]) m[g][f] += c;
  }
  for (const auto& t : a.terms()) m[t.exp][cols] += t.coef.to_rational();
  std::vector<std::uint32_t> pivot_col;
  std::uint32_t r = 0;
  for (std::uint32_t c = 0; c < cols && r < rows; ++c) {
    std::uint32_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::uint32_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::uint32_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::uint32_t i = r; i < rows; ++i) {
    if (sgn(m[i][cols]) != 0) return false;
  }
  coords.assign(cols, Rational(0));
  for (std::uint32_t i = 0; i < r; ++i) coords[pivot_col[i]] = m[i][cols];
  return true;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "euler_phi: n must be positive");
  std::uint32_t result = n;
  std::uint32_t m = n;
  for (std::uint32_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long long> cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "cyclotomic_polynomial: n must be positive");
  return compute_cyclotomic(n);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto ok = [](const std::string& digits) {
    return !digits.empty() &&
           std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); });
  };
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.erase(0, 1);
  }
  const auto slash = body.find('/');
  const std::string num = body.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!ok(num) || !ok(den)) fail(ErrorCode::kParse, "bad rational literal '" + s + "'");
  Rational r{mpz_class(num), mpz_class(den)};
  if (r.get_den() == 0) fail(ErrorCode::kParse, "zero denominator in '" + s + "'");
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

CycNum::CycNum(long value) {
  if (value != 0) terms_.push_back({0, Coef(static_cast<long long>(value))});
}

CycNum::CycNum(const Rational& value) {
  if (sgn(value) != 0) terms_.push_back({0, Coef(value)});
}

CycNum::CycNum(std::uint32_t order, TermList terms)
    : order_(order), terms_(std::move(terms)) {
  settle();
}

void CycNum::settle() {
  if (terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0)) order_ = 1;
}

CycNum CycNum::root_of_unity(std::uint32_t n, long e) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "root_of_unity: order must be positive");
  long r = e % static_cast<long>(n);
  if (r < 0) r += n;
  const auto& t = table(n);
  TermList terms;
  for (const auto& [f, c] : t.powers[static_cast<std::uint32_t>(r)]) terms.push_back({f, Coef(c)});
  return CycNum(n, std::move(terms));
}

bool CycNum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

bool CycNum::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coef.is_one();
}

Rational CycNum::rational_value() const {
  if (!is_rational()) fail(ErrorCode::kInvalidArgument, "rational_value: " + to_string() + " is not rational");
  return terms_.empty() ? Rational(0) : terms_[0].coef.to_rational();
}

CycNum CycNum::promoted(std::uint32_t m) const {
  if (m == order_) return *this;
  if (m == 0 || m % order_ != 0) {
    fail(ErrorCode::kInvalidArgument, "promoted: conductor " + std::to_string(m) +
                                          " is not a multiple of " + std::to_string(order_));
  }
  if (is_rational()) return *this;
  const auto& t = table(m);
  const std::uint32_t factor = m / order_;
  CoefAcc acc(t.phi);
  for (const auto& term : terms_) accumulate(acc, t, term.exp * factor, term.coef);
  CycNum out;
  out.order_ = m;
  out.terms_ = collect(acc);
  out.settle();
  return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const std::uint32_t n = lcm_u32(order_, o.order_);
  CycNum pa_store, pb_store;
  const CycNum* pa = this;
  const CycNum* pb = &o;
  if (order_ != n && !is_rational()) pa = &(pa_store = promoted(n));
  if (o.order_ != n && !o.is_rational()) pb = &(pb_store = o.promoted(n));
  const auto& at = pa->terms_;
  const auto& bt = pb->terms_;
  TermList merged;
  merged.reserve(at.size() + bt.size());
  std::size_t i = 0, j = 0;
  while (i < at.size() || j < bt.size()) {
    if (j == bt.size() || (i < at.size() && at[i].exp < bt[j].exp)) {
      merged.push_back(at[i++]);
    } else if (i == at.size() || bt[j].exp < at[i].exp) {
      merged.push_back(bt[j++]);
    } else {
      Coef s = at[i].coef + bt[j].coef;
      if (!s.is_zero()) merged.push_back({at[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  order_ = n;
  terms_ = std::move(merged);
  settle();
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& t : out.terms_) t.coef.negate();
  return out;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_rational() || b.is_rational()) {
    const bool a_rat = a.is_rational();
    const Coef& s = a_rat ? a.terms_[0].coef : b.terms_[0].coef;
    CycNum out = a_rat ? b : a;
    if (s.is_one()) return out;
    if (s == Coef(-1)) {
      for (auto& t : out.terms_) t.coef.negate();
      return out;
    }
    for (auto& t : out.terms_) t.coef *= s;
    return out;
  }
  const std::uint32_t n = lcm_u32(a.order_, b.order_);
  CycNum pa_store, pb_store;
  const CycNum* pa = &a;
  const CycNum* pb = &b;
  if (a.order_ != n) pa = &(pa_store = a.promoted(n));
  if (b.order_ != n) pb = &(pb_store = b.promoted(n));
  const auto& t = table(n);
  if (pa->terms_.size() == 1 && pb->terms_.size() == 1) {
    const auto& x = pa->terms_[0];
    const auto& y = pb->terms_[0];
    std::uint32_t e = x.exp + y.exp;
    if (e >= n) e -= n;
    const Coef prod = x.coef * y.coef;
    CycNum::TermList terms;
    if (e < t.phi) {
      terms.push_back({e, prod});
    } else {
      for (const auto& [f, m] : t.powers[e]) terms.push_back({f, prod * Coef(m)});
    }
    return CycNum(n, std::move(terms));
  }
  CoefAcc acc(t.phi);
  Coef prod;
  for (const auto& x : pa->terms_) {
    for (const auto& y : pb->terms_) {
      std::uint32_t e = x.exp + y.exp;
      if (e >= n) e -= n;
      prod = x.coef * y.coef;
      accumulate(acc, t, e, prod);
    }
  }
  return CycNum(n, collect(acc));
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum CycNum::galois(std::uint32_t j) const {
  if (is_rational()) return *this;
  if (std::gcd(j, order_) != 1) {
    fail(ErrorCode::kInvalidArgument, "galois: exponent not coprime to conductor");
  }
  const auto& t = table(order_);
  CoefAcc acc(t.phi);
  for (const auto& term : terms_) {
    const auto e = static_cast<std::uint32_t>((static_cast<std::uint64_t>(term.exp) * j) % order_);
    accumulate(acc, t, e, term.coef);
  }
  return CycNum(order_, collect(acc));
}

CycNum CycNum::conj() const {
  if (is_rational()) return *this;
  return galois(order_ - 1);
}

CycNum CycNum::inverse() const {
  if (is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero");
  if (is_rational()) return CycNum(1u, TermList{{0, terms_[0].coef.inverse()}});
  if (terms_.size() == 1) {
    CycNum r = root_of_unity(order_, static_cast<long>(order_ - terms_[0].exp));
    const Coef inv = terms_[0].coef.inverse();
    for (auto& t : r.terms_) t.coef *= inv;
    return r;
  }
  // The product of all non-trivial conjugates is norm / x.
  CycNum others(1L);
  for (std::uint32_t j = 2; j < order_; ++j) {
    if (std::gcd(j, order_) == 1) others *= galois(j);
  }
  const CycNum norm = *this * others;
  return others * CycNum(Rational(1 / norm.rational_value()));
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this = *this * o.inverse(); }

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(1L);
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const std::uint32_t n = lcm_u32(a.order_, b.order_);
  return a.promoted(n).terms_ == b.promoted(n).terms_;
}

CycNum CycNum::normalized() const {
  if (is_rational()) return *this;
  std::vector<Rational> coords;
  for (std::uint32_t d = 1; d < order_; ++d) {
    if (order_ % d != 0 || d % 4 == 2) continue;
    if (!express_in_subfield(*this, d, coords)) continue;
    TermList terms;
    for (std::uint32_t f = 0; f < coords.size(); ++f) {
      if (sgn(coords[f]) != 0) terms.push_back({f, Coef(coords[f])});
    }
    return CycNum(d, std::move(terms));
  }
  if (order_ % 4 == 2) {
    // Q(zeta_n) = Q(zeta_{n/2}) for n = 2 mod 4, so the loop above always hits.
    fail(ErrorCode::kStructure, "normalized: failed to descend from conductor " + std::to_string(order_));
  }
  return *this;
}

std::complex<double> CycNum::approx(unsigned bits) const {
  if (is_zero()) return {0.0, 0.0};
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 32 +
                           static_cast<mpfr_prec_t>(std::bit_width(terms_.size()));
  mpfr_t re, im, angle, c, s, q;
  mpfr_inits2(prec, re, im, angle, c, s, q, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  for (const auto& t : terms_) {
    mpfr_const_pi(angle, MPFR_RNDN);
    mpfr_mul_ui(angle, angle, 2UL * t.exp, MPFR_RNDN);
    mpfr_div_ui(angle, angle, order_, MPFR_RNDN);
    mpfr_sin_cos(s, c, angle, MPFR_RNDN);
    const Rational cq = t.coef.to_rational();
    mpfr_set_q(q, cq.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(c, c, q, MPFR_RNDN);
    mpfr_mul(s, s, q, MPFR_RNDN);
    mpfr_add(re, re, c, MPFR_RNDN);
    mpfr_add(im, im, s, MPFR_RNDN);
  }
  std::complex<double> out(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
  mpfr_clears(re, im, angle, c, s, q, static_cast<mpfr_ptr>(nullptr));
  return out;
}

std::string CycNum::to_string() const {
  if (is_zero()) return "0";
  const CycNum n = normalized();
  std::string out;
  bool first = true;
  for (const auto& t : n.terms_) {
    const bool neg = t.coef.sign() < 0;
    const Coef mag = t.coef.abs();
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.exp == 0) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += "z" + std::to_string(n.order_) + "^" + std::to_string(t.exp);
    }
  }
  return out;
}

CycNum CycNum::parse(std::string_view text) {
  std::string s;
  bool gap = false;
  for (char ch : text) {
    const auto u = static_cast<unsigned char>(ch);
    if (std::isspace(u)) {
      gap = !s.empty();
      continue;
    }
    if (gap && std::isalnum(u) && std::isalnum(static_cast<unsigned char>(s.back()))) {
      fail(ErrorCode::kParse, "unexpected whitespace in scalar literal '" + std::string(text) + "'");
    }
    gap = false;
    s.push_back(ch);
  }
  if (s.empty()) fail(ErrorCode::kParse, "empty scalar literal");
  CycNum total;
  std::size_t pos = 0;
  auto read_uint = [&](const char* what) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail(ErrorCode::kParse, std::string("expected ") + what + " in '" + s + "'");
    return s.substr(start, pos - start);
  };
  bool first = true;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    } else if (!first) {
      fail(ErrorCode::kParse, "expected '+' or '-' in '" + s + "'");
    }
    first = false;
    Rational coef(1);
    bool have_coef = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::string lit = read_uint("integer");
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        lit += "/" + read_uint("denominator");
      }
      coef = parse_rational(lit);
      have_coef = true;
    }
    CycNum term(coef);
    bool have_root = false;
    if (pos < s.size() && (s[pos] == '*' || s[pos] == 'z')) {
      if (s[pos] == '*') {
        if (!have_coef) fail(ErrorCode::kParse, "dangling '*' in '" + s + "'");
        ++pos;
      }
      if (pos >= s.size() || s[pos] != 'z') fail(ErrorCode::kParse, "expected 'z<n>' in '" + s + "'");
      ++pos;
      const std::string order = read_uint("root order");
      long e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        bool eneg = false;
        if (pos < s.size() && s[pos] == '-') {
          eneg = true;
          ++pos;
        }
        e = std::stol(read_uint("exponent"));
        if (eneg) e = -e;
      }
      const unsigned long n = std::stoul(order);
      if (n == 0 || n > 100000) fail(ErrorCode::kParse, "root order out of range in '" + s + "'");
      term = term * root_of_unity(static_cast<std::uint32_t>(n), e);
      have_root = true;
    }
    if (!have_coef && !have_root) fail(ErrorCode::kParse, "malformed scalar literal '" + s + "'");
    total += neg ? -term : term;
  }
  return total;
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

}  // namespace fqg
