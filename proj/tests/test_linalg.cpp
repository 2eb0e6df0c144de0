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

#include <random>

#include "doctest.h"
#include "fqg/error.hpp"
#include "fqg/linalg.hpp"

using namespace fqg;

namespace {

// Fraction-free (Bareiss) rank over the integers, independent of rref().
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

ExactMatrix random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int rank_cap,
                              std::vector<std::vector<mpz_class>>& ints) {
  std::uniform_int_distribution<int> d(-3, 3);
  // Product of r x k and k x c gives rank <= k.
  std::vector<std::vector<int>> a(r, std::vector<int>(rank_cap)), b(rank_cap, std::vector<int>(c));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  for (auto& row : b)
    for (auto& x : row) x = d(rng);
  ExactMatrix m(r, c);
  ints.assign(r, std::vector<mpz_class>(c));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      long s = 0;
      for (int k = 0; k < rank_cap; ++k) s += a[i][k] * b[k][j];
      m(i, j) = CycNum(s);
      ints[i][j] = s;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("rank agrees with a Bareiss oracle") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 2 + rng() % 6, c = 2 + rng() % 6;
    const int k = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<mpz_class>> ints;
    const ExactMatrix m = random_int_matrix(rng, r, c, k, ints);
    CHECK(rank(m) == bareiss_rank(ints));
  }
}

TEST_CASE("rref is idempotent and canonical") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<mpz_class>> ints;
    const ExactMatrix m = random_int_matrix(rng, 5, 6, 3, ints);
    const ExactMatrix r1 = rref(m);
    CHECK(rref(r1) == r1);
    // Row operations do not change the rref.
    ExactMatrix m2 = m;
    for (std::size_t j = 0; j < m.cols(); ++j) m2(0, j) += CycNum(2L) * m(1, j);
    CHECK(rref(m2) == r1);
  }
}

TEST_CASE("subspace operations satisfy the Grassmann identity") {
  std::mt19937 rng(9);
  const CycNum i = CycNum::root_of_unity(4, 1);
  for (int trial = 0; trial < 15; ++trial) {
    std::uniform_int_distribution<int> d(-2, 2);
    auto rand_vecs = [&](std::size_t count) {
      std::vector<Vec> out;
      for (std::size_t a = 0; a < count; ++a) {
        Vec v(6);
        for (auto& x : v) x = CycNum(static_cast<long>(d(rng))) + CycNum(static_cast<long>(d(rng))) * i;
        out.push_back(v);
      }
      return out;
    };
    const Subspace a = span(6, rand_vecs(1 + rng() % 4));
    const Subspace b = span(6, rand_vecs(1 + rng() % 4));
    const Subspace s = sum(a, b);
    const Subspace n = intersect(a, b);
    CHECK(s.dim() + n.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(a.contains(n));
    CHECK(b.contains(n));
  }
}

TEST_CASE("solve_linear") {
  ExactMatrix a = ExactMatrix::from_rows({{CycNum(1L), CycNum(2L)}, {CycNum(2L), CycNum(4L)}}, 2);
  auto sol = solve_linear(a, {CycNum(3L), CycNum(6L)});
  REQUIRE(sol.has_value());
  CHECK(sol->nullspace.dim() == 1);
  CHECK(sol->particular[0] + CycNum(2L) * sol->particular[1] == CycNum(3L));
  CHECK_FALSE(solve_linear(a, {CycNum(3L), CycNum(7L)}).has_value());
}

TEST_CASE("span rejects wrong lengths") {
  CHECK_THROWS_AS(span(3, {Vec(2)}), Error);
  const Subspace z = span(3, {});
  CHECK(z.dim() == 0);
  CHECK(z.contains(zero_vec(3)));
}
