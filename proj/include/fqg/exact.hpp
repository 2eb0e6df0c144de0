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

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A CycNum stores its conductor n together with the coordinates of the number
// in the power basis 1, z, ..., z^(phi(n)-1) of Q(z)/(Phi_n). Because that
// basis is a Q-basis of the field, two numbers of the same conductor are equal
// iff their coordinate lists are identical, and zero is the empty list.
// Binary operations first promote both operands to the lcm of the conductors.

#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace fqg {

using Rational = mpq_class;

/// Canonical rational number stored inline as an int64 fraction while it
/// fits, and in a GMP rational otherwise.
class Coef {
 public:
  Coef() = default;
  Coef(long long value) : n_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Coef(const Rational& value);
  Coef(const Coef& o) : n_(o.n_), d_(o.d_), big_(o.big_ ? std::make_unique<Rational>(*o.big_) : nullptr) {}
  Coef(Coef&&) noexcept = default;
  Coef& operator=(const Coef& o);
  Coef& operator=(Coef&&) noexcept = default;
  ~Coef() = default;

  int sign() const;
  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  Rational to_rational() const;
  std::string to_string() const;

  Coef& operator+=(const Coef& o);
  Coef& operator-=(const Coef& o);
  Coef& operator*=(const Coef& o);
  friend Coef operator+(Coef a, const Coef& b) { return a += b; }
  friend Coef operator-(Coef a, const Coef& b) { return a -= b; }
  friend Coef operator*(const Coef& a, const Coef& b);
  Coef operator-() const;
  void negate();
  /// Throws kDivisionByZero on zero.
  Coef inverse() const;
  Coef abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Coef& a, const Coef& b);
  friend bool operator!=(const Coef& a, const Coef& b) { return !(a == b); }

 private:
  void settle();

  std::int64_t n_ = 0;
  std::int64_t d_ = 1;
  std::unique_ptr<Rational> big_;  // set only when the value does not fit
};

class CycNum {
 public:
  struct Term {
    std::uint32_t exp;
    Coef coef;

    bool operator==(const Term& o) const { return exp == o.exp && coef == o.coef; }
  };
  using TermList = boost::container::small_vector<Term, 2>;

  CycNum() = default;
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  CycNum(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_n^e; throws kInvalidArgument for n == 0.
  static CycNum root_of_unity(std::uint32_t n, long e);

  /// Parses the scalar literal format, e.g. "1/2*z8^3 - 1/4".
  static CycNum parse(std::string_view text);

  std::uint32_t conductor() const { return order_; }
  std::span<const Term> terms() const { return {terms_.data(), terms_.size()}; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_one() const;
  /// Requires is_rational().
  Rational rational_value() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum operator-() const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Multiplicative inverse; throws kDivisionByZero on zero.
  CycNum inverse() const;
  CycNum pow(long e) const;
  /// Complex conjugation, zeta_n^e -> zeta_n^(n-e).
  CycNum conj() const;
  /// The Galois automorphism zeta_n -> zeta_n^j (gcd(j, n) = 1).
  CycNum galois(std::uint32_t j) const;

  /// Same number re-expressed over conductor m; m must be a multiple of conductor().
  CycNum promoted(std::uint32_t m) const;
  /// Same number over the smallest conductor that contains it.
  CycNum normalized() const;

  /// Value under zeta_n -> exp(2 pi i / n). Internally evaluated with MPFR at
  /// `bits` + guard bits, then rounded to double.
  std::complex<double> approx(unsigned bits = 53) const;

  /// Canonical literal: normalized conductor, ascending exponents.
  std::string to_string() const;

 private:
  CycNum(std::uint32_t order, TermList terms);
  void settle();

  std::uint32_t order_ = 1;
  TermList terms_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

/// Euler phi.
std::uint32_t euler_phi(std::uint32_t n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_polynomial(std::uint32_t n);

/// A square root y of x with y in Q(zeta_n), if one exists with small
/// rational coordinates; n must be a multiple of x.conductor(). The candidate
/// is found numerically and confirmed exactly (y * y == x), so a returned value
/// is always correct; std::nullopt means none was recognized.
std::optional<CycNum> sqrt_in_field(const CycNum& x, std::uint32_t n);

/// Parses "a" or "a/b" into a canonical rational.
Rational parse_rational(std::string_view text);

}  // namespace fqg
