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

// Conjugacy-class dimension arithmetic for semisimple Hopf algebras of
// dimension 2pq: multiset enumeration and a replay of the case analysis.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace fqg {

bool is_prime(long n);

/// Class dimensions besides the distinguished unit class C_0 = C.
struct ClassDimMultiset {
  std::map<long, long> counts;  // dimension -> multiplicity

  long total() const;  // including the unit class
  std::vector<long> dims() const;  // 1 first, then the others ascending
  bool has_dim(long d) const { return counts.count(d) != 0; }
  std::string to_string() const;
  bool operator==(const ClassDimMultiset& o) const = default;
  auto operator<=>(const ClassDimMultiset& o) const = default;
};

struct EnumerateOptions {
  std::uint64_t max_results = 1000000;
};

/// Divisors of 2pq, ascending.
std::vector<long> divisors_2pq(long p, long q);

/// All multisets {1} + M with M drawn from the divisors of 2pq outside
/// `forbidden` and 1 + sum(M) = 2pq, in ascending order. kInvalidArgument for
/// equal or non-odd-prime p, q; kResource past options.max_results.
std::vector<ClassDimMultiset> enumerate_multisets(long p, long q, const std::set<long>& forbidden,
                                                  const EnumerateOptions& options = {});
/// Number of such multisets without materializing them.
std::uint64_t count_multisets(long p, long q, const std::set<long>& forbidden);

enum class WalkBranch {
  kJ0Small,      // a class with p not dividing its dimension has dim 1 or q
  kJ0Dim2,       // the only such classes have dim 2 (absent from the printed case list)
  kJ1Small,      // dim 1 or p
  kJ1Dim2,
  kJ2Small,      // dim 1, p or q
  kFinalPq,      // j0 = 2q, j1 = 2p, j2 = pq
};

const char* branch_name(WalkBranch b);

struct WalkEntry {
  ClassDimMultiset multiset;
  WalkBranch branch;
  std::vector<long> chosen;  // dimensions picked for j0, j1, j2
  bool has_small_class = false;  // some non-unit class of dim 1, p or q
};

struct WalkReport {
  long p = 0, q = 0, k = 0;
  long final_value = 0;  // 5k(q-2) - 5
  std::set<long> forbidden;
  std::uint64_t multisets = 0;
  std::map<std::string, std::uint64_t> tallies;  // by branch name
  std::uint64_t with_small_class = 0;
  std::vector<WalkEntry> final_branch;  // multisets reaching the pq branch
  /// For the pq branch: the remaining sum and whether it divides 2pq.
  long remaining_sum = 0;
  bool remaining_divides = false;
  std::vector<std::string> reconstructed_steps;
};

/// Requires odd primes p != q with p = 2 mod 5 and q != 5 (kInvalidArgument).
WalkReport proof_walk(long p, long q, const std::set<long>& forbidden = {}, const EnumerateOptions& options = {});

}  // namespace fqg
