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

#include <cstdint>
#include <limits>
#include <numeric>

#include "fqg/error.hpp"
#include "fqg/exact.hpp"

namespace fqg {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 mag(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(i128 v) {
  const u128 m = mag(v);
  const auto hi = static_cast<std::uint64_t>(m >> 64);
  const auto lo = static_cast<std::uint64_t>(m);
  mpz_class z(static_cast<unsigned long>(hi));
  z <<= 64;
  z += mpz_class(static_cast<unsigned long>(lo));
  return v < 0 ? mpz_class(-z) : z;
}

}  // namespace

Coef::Coef(const Rational& value) {
  big_ = std::make_unique<Rational>(value);
  big_->canonicalize();
  settle();
}

Coef& Coef::operator=(const Coef& o) {
  if (this != &o) {
    n_ = o.n_;
    d_ = o.d_;
    big_ = o.big_ ? std::make_unique<Rational>(*o.big_) : nullptr;
  }
  return *this;
}

void Coef::settle() {
  if (!big_) return;
  if (mpz_fits_slong_p(big_->get_num_mpz_t()) && mpz_fits_slong_p(big_->get_den_mpz_t())) {
    n_ = mpz_get_si(big_->get_num_mpz_t());
    d_ = mpz_get_si(big_->get_den_mpz_t());
    big_.reset();
  }
}

int Coef::sign() const {
  if (big_) return sgn(*big_);
  return (n_ > 0) - (n_ < 0);
}

Rational Coef::to_rational() const {
  if (big_) return *big_;
  return Rational(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

std::string Coef::to_string() const {
  if (big_) return big_->get_str();
  if (d_ == 1) return std::to_string(n_);
  return std::to_string(n_) + "/" + std::to_string(d_);
}

Coef& Coef::operator+=(const Coef& o) {
  if (o.is_zero()) return *this;
  if (!big_ && !o.big_) {
    i128 num, den;
    if (d_ == o.d_) {
      num = static_cast<i128>(n_) + o.n_;
      den = d_;
    } else {
      num = static_cast<i128>(n_) * o.d_ + static_cast<i128>(o.n_) * d_;
      den = static_cast<i128>(d_) * o.d_;
    }
    if (num == 0) {
      n_ = 0;
      d_ = 1;
      return *this;
    }
    if (den != 1) {
      const u128 g = gcd128(mag(num), static_cast<u128>(den));
      if (g != 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
      }
    }
    if (fits64(num) && fits64(den)) {
      n_ = static_cast<std::int64_t>(num);
      d_ = static_cast<std::int64_t>(den);
    } else {
      big_ = std::make_unique<Rational>(to_mpz(num), to_mpz(den));
    }
    return *this;
  }
  Rational r = to_rational() + o.to_rational();
  big_ = std::make_unique<Rational>(std::move(r));
  settle();
  return *this;
}

Coef& Coef::operator-=(const Coef& o) { return *this += -o; }

Coef operator*(const Coef& a, const Coef& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (!a.big_ && !b.big_) {
    if (a.d_ == 1 && b.d_ == 1) {
      const i128 p = static_cast<i128>(a.n_) * b.n_;
      if (fits64(p)) return Coef(static_cast<long long>(p));
    }
    const auto g1 = static_cast<std::int64_t>(
        std::gcd(static_cast<std::uint64_t>(mag(a.n_)), static_cast<std::uint64_t>(b.d_)));
    const auto g2 = static_cast<std::int64_t>(
        std::gcd(static_cast<std::uint64_t>(mag(b.n_)), static_cast<std::uint64_t>(a.d_)));
    const i128 num = static_cast<i128>(a.n_ / g1) * (b.n_ / g2);
    const i128 den = static_cast<i128>(a.d_ / g2) * (b.d_ / g1);
    Coef out;
    if (fits64(num) && fits64(den)) {
      out.n_ = static_cast<std::int64_t>(num);
      out.d_ = static_cast<std::int64_t>(den);
    } else {
      out.big_ = std::make_unique<Rational>(to_mpz(num), to_mpz(den));
    }
    return out;
  }
  Coef out;
  out.big_ = std::make_unique<Rational>(a.to_rational() * b.to_rational());
  out.settle();
  return out;
}

Coef& Coef::operator*=(const Coef& o) { return *this = *this * o; }

void Coef::negate() {
  if (big_) {
    mpq_neg(big_->get_mpq_t(), big_->get_mpq_t());
    settle();  // -(-2^63) does not fit, 2^63 may come back as -2^63
  } else if (n_ == std::numeric_limits<std::int64_t>::min()) {
    big_ = std::make_unique<Rational>(-to_rational());
  } else {
    n_ = -n_;
  }
}

Coef Coef::operator-() const {
  Coef out = *this;
  out.negate();
  return out;
}

Coef Coef::inverse() const {
  if (is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero");
  if (!big_ && n_ != std::numeric_limits<std::int64_t>::min()) {
    Coef out;
    out.n_ = n_ < 0 ? -d_ : d_;
    out.d_ = n_ < 0 ? -n_ : n_;
    return out;
  }
  Coef out;
  out.big_ = std::make_unique<Rational>(1 / to_rational());
  out.settle();
  return out;
}

bool operator==(const Coef& a, const Coef& b) {
  if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical storage: a value that fits is never big
}

}  // namespace fqg
