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

#include "fqg/classdims.hpp"

#include <algorithm>
#include <functional>

#include "fqg/error.hpp"

namespace fqg {

namespace {

void require_odd_primes(long p, long q) {
  if (!is_prime(p) || !is_prime(q) || p == 2 || q == 2) fail(ErrorCode::kInvalidArgument, "p and q must be odd primes");
  if (p == q) fail(ErrorCode::kInvalidArgument, "p and q must be distinct");
  if (p > 100000 || q > 100000) fail(ErrorCode::kInvalidArgument, "p and q must be below 100000");
}

std::vector<long> allowed_parts(long p, long q, const std::set<long>& forbidden) {
  std::vector<long> parts;
  const long target = 2 * p * q - 1;
  for (long d : divisors_2pq(p, q)) {
    if (d <= target && !forbidden.count(d)) parts.push_back(d);
  }
  return parts;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long ClassDimMultiset::total() const {
  long s = 1;
  for (const auto& [d, m] : counts) s += d * m;
  return s;
}

std::vector<long> ClassDimMultiset::dims() const {
  std::vector<long> out{1};
  for (const auto& [d, m] : counts) out.insert(out.end(), static_cast<std::size_t>(m), d);
  return out;
}

std::string ClassDimMultiset::to_string() const {
  std::string out = "1";
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    out += " + ";
    if (it->second != 1) out += std::to_string(it->second) + "x";
    out += std::to_string(it->first);
  }
  return out;
}

std::vector<long> divisors_2pq(long p, long q) {
  std::vector<long> out{1, 2, p, q, 2 * p, 2 * q, p * q, 2 * p * q};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t count_multisets(long p, long q, const std::set<long>& forbidden) {
  require_odd_primes(p, q);
  const long target = 2 * p * q - 1;
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(target) + 1, 0);
  ways[0] = 1;
  for (long d : allowed_parts(p, q, forbidden)) {
    for (long s = d; s <= target; ++s) ways[s] += ways[s - d];
  }
  return ways[target];
}

std::vector<ClassDimMultiset> enumerate_multisets(long p, long q, const std::set<long>& forbidden,
                                                  const EnumerateOptions& options) {
  require_odd_primes(p, q);
  const long target = 2 * p * q - 1;
  const std::vector<long> parts = allowed_parts(p, q, forbidden);  // ascending
  std::vector<ClassDimMultiset> out;
  ClassDimMultiset cur;
  // Largest part first; multiplicities bounded by the remaining sum.
  std::function<void(std::size_t, long)> rec = [&](std::size_t idx, long rest) {
    if (rest == 0) {
      if (out.size() >= options.max_results) {
        fail(ErrorCode::kResource, "more than " + std::to_string(options.max_results) + " class-dimension multisets");
      }
      out.push_back(cur);
      return;
    }
    if (idx == 0) return;
    const long d = parts[idx - 1];
    for (long m = rest / d; m >= 0; --m) {
      if (m > 0) cur.counts[d] = m;
      rec(idx - 1, rest - m * d);
      cur.counts.erase(d);
    }
  };
  rec(parts.size(), target);
  std::sort(out.begin(), out.end());
  return out;
}

const char* branch_name(WalkBranch b) {
  switch (b) {
    case WalkBranch::kJ0Small:
      return "j0_dim_1_or_q";
    case WalkBranch::kJ0Dim2:
      return "j0_only_dim_2";
    case WalkBranch::kJ1Small:
      return "j1_dim_1_or_p";
    case WalkBranch::kJ1Dim2:
      return "j1_only_dim_2";
    case WalkBranch::kJ2Small:
      return "j2_dim_1_p_or_q";
    case WalkBranch::kFinalPq:
      return "j2_dim_pq";
  }
  return "?";
}

WalkReport proof_walk(long p, long q, const std::set<long>& forbidden, const EnumerateOptions& options) {
  require_odd_primes(p, q);
  if (p % 5 != 2) fail(ErrorCode::kInvalidArgument, "p - 2 must be divisible by 5");
  if (q == 5) fail(ErrorCode::kInvalidArgument, "q = 5 is excluded");
  WalkReport rep;
  rep.p = p;
  rep.q = q;
  rep.k = (p - 2) / 5;
  rep.final_value = 5 * rep.k * (q - 2) - 5;
  rep.forbidden = forbidden;
  rep.remaining_sum = 2 * p * q - 1 - 2 * p - 2 * q - p * q;
  rep.remaining_divides = rep.remaining_sum > 0 && (2 * p * q) % rep.remaining_sum == 0;
  rep.reconstructed_steps = {
      "existence of j1 uses 1 + 2q + sum_{j != 0, j0} dim C_j = 2pq (the printed line is truncated)",
      "a class of dimension 2 is admissible for j0 and j1 but not listed; such multisets are tallied separately",
  };
  for (int b = 0; b <= static_cast<int>(WalkBranch::kFinalPq); ++b) rep.tallies[branch_name(static_cast<WalkBranch>(b))] = 0;

  const auto all = enumerate_multisets(p, q, forbidden, options);
  rep.multisets = all.size();
  for (const auto& m : all) {
    WalkEntry e{m, WalkBranch::kJ0Small, {}, m.has_dim(1) || m.has_dim(p) || m.has_dim(q)};
    if (e.has_small_class) ++rep.with_small_class;
    // Remaining multiplicities after the classes already chosen.
    std::map<long, long> left = m.counts;
    auto take = [&](long d) {
      if (--left[d] == 0) left.erase(d);
      e.chosen.push_back(d);
    };
    auto has = [&](long d) { return left.count(d) != 0; };
    auto pick_small = [&](std::initializer_list<long> dims) {
      for (long d : dims) {
        if (has(d)) {
          take(d);
          return true;
        }
      }
      return false;
    };
    if (pick_small({1, q})) {
      e.branch = WalkBranch::kJ0Small;
    } else if (has(2 * q)) {
      take(2 * q);
      if (pick_small({1, p})) {
        e.branch = WalkBranch::kJ1Small;
      } else if (has(2 * p)) {
        take(2 * p);
        if (pick_small({1, p, q})) {
          e.branch = WalkBranch::kJ2Small;
        } else if (has(p * q)) {
          take(p * q);
          e.branch = WalkBranch::kFinalPq;
        } else {
          fail(ErrorCode::kStructure, "no class of odd dimension in " + m.to_string());
        }
      } else if (has(2)) {
        e.branch = WalkBranch::kJ1Dim2;
      } else {
        fail(ErrorCode::kStructure, "no class with q not dividing its dimension in " + m.to_string());
      }
    } else if (has(2)) {
      e.branch = WalkBranch::kJ0Dim2;
    } else {
      fail(ErrorCode::kStructure, "no class with p not dividing its dimension in " + m.to_string());
    }
    ++rep.tallies[branch_name(e.branch)];
    if (e.branch == WalkBranch::kFinalPq) rep.final_branch.push_back(e);
  }
  return rep;
}

}  // namespace fqg
