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

#include <functional>
#include <set>

#include "doctest.h"
#include "fqg/classdims.hpp"
#include "fqg/error.hpp"

using namespace fqg;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no fqg::Error thrown");
  return ErrorCode::kInvalidArgument;
}

// Backtracking over non-decreasing sequences, smallest part first.
std::set<std::vector<long>> oracle(long p, long q, const std::set<long>& forbidden) {
  const long n = 2 * p * q;
  std::vector<long> parts;
  for (long d = 1; d < n; ++d) {
    if (n % d == 0 && !forbidden.count(d)) parts.push_back(d);
  }
  std::set<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(std::size_t, long)> rec = [&](std::size_t from, long rest) {
    if (rest == 0) {
      std::vector<long> dims{1};
      dims.insert(dims.end(), cur.begin(), cur.end());
      out.insert(dims);
      return;
    }
    for (std::size_t i = from; i < parts.size() && parts[i] <= rest; ++i) {
      cur.push_back(parts[i]);
      rec(i, rest - parts[i]);
      cur.pop_back();
    }
  };
  rec(0, n - 1);
  return out;
}

std::set<std::vector<long>> as_set(const std::vector<ClassDimMultiset>& ms) {
  std::set<std::vector<long>> out;
  for (const auto& m : ms) out.insert(m.dims());
  return out;
}

}  // namespace

TEST_CASE("enumeration matches the backtracking oracle") {
  struct Case {
    long p, q;
    std::set<long> forbidden;
  };
  const std::vector<Case> cases{{7, 3, {1, 7, 3}}, {7, 3, {}}, {3, 5, {}}, {5, 3, {2}}, {17, 3, {1, 17, 3}}, {7, 11, {1, 7, 11}}};
  for (const auto& c : cases) {
    CAPTURE(c.p);
    CAPTURE(c.q);
    const auto ms = enumerate_multisets(c.p, c.q, c.forbidden);
    CHECK(as_set(ms) == oracle(c.p, c.q, c.forbidden));
    CHECK(ms.size() == as_set(ms).size());
    CHECK(count_multisets(c.p, c.q, c.forbidden) == ms.size());
    CHECK(std::is_sorted(ms.begin(), ms.end()));
    for (const auto& m : ms) {
      CHECK(m.total() == 2 * c.p * c.q);
      for (long d : m.dims()) CHECK((2 * c.p * c.q) % d == 0);
    }
  }
}

TEST_CASE("enumeration examples") {
  const auto ms = enumerate_multisets(7, 3, {1, 7, 3});
  ClassDimMultiset expected;
  expected.counts = {{21, 1}, {2, 10}};
  CHECK(std::find(ms.begin(), ms.end(), expected) != ms.end());
  CHECK(expected.to_string() == "1 + 21 + 10x2");
  for (const auto& m : ms) {
    for (const auto& [d, mult] : m.counts) CHECK(std::set<long>{2, 6, 14, 21}.count(d) == 1);
  }

  const auto all = enumerate_multisets(7, 3, {});
  ClassDimMultiset ones;
  ones.counts = {{1, 41}};
  CHECK(std::find(all.begin(), all.end(), ones) != all.end());

  const auto only = enumerate_multisets(3, 5, {2, 3, 5, 6, 10, 15, 30});
  REQUIRE(only.size() == 1);
  CHECK(only[0].counts == std::map<long, long>{{1, 29}});
  CHECK(code_of([] { enumerate_multisets(7, 3, {}, EnumerateOptions{10}); }) == ErrorCode::kResource);
}

TEST_CASE("invalid primes") {
  CHECK(code_of([] { enumerate_multisets(9, 3, {}); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { enumerate_multisets(2, 3, {}); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { enumerate_multisets(3, 3, {}); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { proof_walk(7, 5); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { proof_walk(11, 3); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("proof walk") {
  const WalkReport w = proof_walk(7, 3, {1, 7, 3});
  CHECK(w.k == 1);
  CHECK(w.final_value == 0);
  CHECK(w.remaining_sum == 0);
  CHECK_FALSE(w.remaining_divides);
  std::uint64_t total = 0;
  for (const auto& [name, n] : w.tallies) total += n;
  CHECK(total == w.multisets);
  CHECK(w.multisets == 6);
  REQUIRE(w.final_branch.size() == 1);
  CHECK(w.final_branch[0].multiset.to_string() == "1 + 21 + 14 + 6");
  CHECK(w.final_branch[0].chosen == std::vector<long>{6, 14, 21});
  CHECK(w.tallies.at("j0_only_dim_2") == 2);

  const WalkReport w17 = proof_walk(17, 3, {1, 17, 3});
  CHECK(w17.k == 3);
  CHECK(w17.final_value == 10);
  CHECK(w17.remaining_sum == 10);
  CHECK_FALSE(w17.remaining_divides);

  // Multisets without a small class are exactly those avoiding 1, p and q.
  const WalkReport open = proof_walk(7, 3);
  CHECK(open.with_small_class + enumerate_multisets(7, 3, {1, 7, 3}).size() == open.multisets);
  CHECK(open.tallies.at("j0_dim_1_or_q") > 0);
}
