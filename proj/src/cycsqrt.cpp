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
#include <complex>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "fqg/error.hpp"
#include "fqg/exact.hpp"

namespace fqg {

namespace {

constexpr long kMaxDenominator = 1000000;
constexpr double kRecognizeTol = 1e-9;

// Best rational approximation by continued fractions, if it is close enough.
std::optional<Rational> recognize(double v) {
  if (!std::isfinite(v)) return std::nullopt;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = v;
  for (int step = 0; step < 64; ++step) {
    const double a = std::floor(x);
    if (std::abs(a) > 1e12) return std::nullopt;
    const long ai = static_cast<long>(a);
    const long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > kMaxDenominator) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    if (std::abs(v - static_cast<double>(p1) / static_cast<double>(q1)) < kRecognizeTol) {
      return Rational(mpz_class(p1), mpz_class(q1));
    }
    const double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace

std::optional<CycNum> sqrt_in_field(const CycNum& x, std::uint32_t n) {
  if (n == 0 || n % x.conductor() != 0) fail(ErrorCode::kInvalidArgument, "sqrt_in_field: n must be a multiple of the conductor");
  if (x.is_zero()) return CycNum();
  const std::uint32_t phi = euler_phi(n);
  if (phi > 16) fail(ErrorCode::kUnsupported, "sqrt_in_field: field degree above 16");
  std::vector<std::uint32_t> units;
  for (std::uint32_t j = 1; j <= n; ++j) {
    if (std::gcd(j, n) == 1) units.push_back(j % n);
  }
  // Rows: embeddings zeta -> exp(2 pi i j / n); columns: power basis.
  const double two_pi = 2.0 * std::acos(-1.0);
  Eigen::MatrixXcd v(phi, phi);
  Eigen::VectorXcd roots(phi);
  for (std::uint32_t r = 0; r < phi; ++r) {
    for (std::uint32_t e = 0; e < phi; ++e) {
      v(r, e) = std::polar(1.0, two_pi * static_cast<double>(units[r]) * e / n);
    }
    roots(r) = std::sqrt(x.galois(units[r] == 0 ? 1 : units[r]).approx(80));
  }
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(v);
  // The sign on the identity embedding is fixed; -y is the other root.
  for (std::uint64_t mask = 0; mask < (1ULL << (phi - 1)); ++mask) {
    Eigen::VectorXcd rhs = roots;
    for (std::uint32_t r = 1; r < phi; ++r) {
      if (mask >> (r - 1) & 1ULL) rhs(r) = -rhs(r);
    }
    const Eigen::VectorXcd c = lu.solve(rhs);
    CycNum y;
    bool ok = true;
    for (std::uint32_t e = 0; e < phi && ok; ++e) {
      if (std::abs(c(e).imag()) > 1e-7) {
        ok = false;
        break;
      }
      auto q = recognize(c(e).real());
      if (!q) {
        ok = false;
        break;
      }
      if (*q != 0) y += CycNum(*q) * CycNum::root_of_unity(n, e);
    }
    if (ok && y * y == x) return y;
  }
  return std::nullopt;
}

}  // namespace fqg
