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

#include <cmath>
#include <random>

#include "doctest.h"
#include "fqg/error.hpp"
#include "fqg/exact.hpp"

using fqg::CycNum;
using fqg::Rational;

namespace {

CycNum random_cyc(std::mt19937& rng, std::uint32_t n) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  CycNum x;
  for (std::uint32_t e = 0; e < n; ++e) {
    if (rng() % 3 == 0) continue;
    x += CycNum(Rational(coef(rng), den(rng))) * CycNum::root_of_unity(n, e);
  }
  return x;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(fqg::cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(fqg::cyclotomic_polynomial(8) == std::vector<long long>{1, 0, 0, 0, 1});
  CHECK(fqg::cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(fqg::euler_phi(15) == 8);
  CHECK(fqg::euler_phi(1) == 1);
}

TEST_CASE("roots of unity") {
  const CycNum z8 = CycNum::root_of_unity(8, 1);
  CHECK(z8.pow(8).is_one());
  CHECK(z8.pow(4) == CycNum(-1L));
  CHECK(CycNum::root_of_unity(8, 2) == CycNum::root_of_unity(4, 1));
  CHECK(CycNum::root_of_unity(6, 1) == -CycNum::root_of_unity(3, 2));
  CHECK_THROWS_AS(CycNum::root_of_unity(0, 1), fqg::Error);
  // 1 + z + ... + z^{n-1} = 0
  for (std::uint32_t n : {2u, 3u, 5u, 8u, 12u, 15u}) {
    CycNum s;
    for (std::uint32_t e = 0; e < n; ++e) s += CycNum::root_of_unity(n, e);
    CHECK(s.is_zero());
  }
}

TEST_CASE("sqrt2 against a high-precision reference") {
  const CycNum z8 = CycNum::root_of_unity(8, 1);
  const CycNum r2 = z8 + z8.conj();
  CHECK((r2 * r2) == CycNum(2L));
  const auto v = r2.approx(80);
  CHECK(std::abs(v.real() - 1.4142135623730950488) < 1e-15);
  CHECK(std::abs(v.imag()) < 1e-15);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (std::uint32_t n : {3u, 4u, 8u, 12u, 15u}) {
    for (int trial = 0; trial < 6; ++trial) {
      const CycNum a = random_cyc(rng, n);
      const CycNum b = random_cyc(rng, n == 15 ? 5 : n);
      const CycNum c = random_cyc(rng, 4);
      CHECK((a + b) == (b + a));
      CHECK((a * b) == (b * a));
      CHECK(((a * b) * c) == (a * (b * c)));
      CHECK((a * (b + c)) == (a * b + a * c));
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      const auto ap = a.approx();
      const auto bp = b.approx();
      const auto abp = (a * b).approx();
      CHECK(std::abs(abp - ap * bp) < 1e-9 * (1 + std::abs(ap * bp)));
    }
  }
}

TEST_CASE("normalization picks the minimal conductor") {
  const CycNum i = CycNum::root_of_unity(8, 2);
  CHECK(i.normalized().conductor() == 4);
  CHECK(i.to_string() == "z4^1");
  const CycNum mixed = CycNum(Rational(-1, 4)) + CycNum(Rational(1, 2)) * CycNum::root_of_unity(8, 3);
  CHECK(mixed.to_string() == "-1/4 + 1/2*z8^3");
  CHECK((CycNum::root_of_unity(12, 4) + CycNum::root_of_unity(12, 8)) == CycNum(-1L));
  CHECK(CycNum::root_of_unity(6, 1).to_string() == "1 + z3^1");
}

TEST_CASE("parse and print round trip") {
  std::mt19937 rng(11);
  for (std::uint32_t n : {1u, 3u, 8u, 12u, 15u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const CycNum a = random_cyc(rng, n);
      CHECK(CycNum::parse(a.to_string()) == a);
    }
  }
  CHECK(CycNum::parse("1/2*z8^3 - 1/4") == CycNum::parse("-1/4 + 1/2*z8^3"));
  CHECK(CycNum::parse("z4") == CycNum::root_of_unity(4, 1));
  CHECK(CycNum::parse("-z8^-1") == -CycNum::root_of_unity(8, 7));
  CHECK_THROWS_AS(CycNum::parse(""), fqg::Error);
  CHECK_THROWS_AS(CycNum::parse("1/0"), fqg::Error);
  CHECK_THROWS_AS(CycNum::parse("2*"), fqg::Error);
  CHECK_THROWS_AS(CycNum::parse("z0"), fqg::Error);
  CHECK_THROWS_AS(CycNum::parse("1 2"), fqg::Error);
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(CycNum(1L) / CycNum(), fqg::Error);
  try {
    (void)CycNum().inverse();
  } catch (const fqg::Error& e) {
    CHECK(e.code() == fqg::ErrorCode::kDivisionByZero);
  }
}
