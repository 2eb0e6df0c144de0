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

#include "doctest.h"
#include "fqg/error.hpp"
#include "fqg/models.hpp"
#include "fqg/series.hpp"

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

// Links L1..L8 of Kac-Paljutkin; index 0 is A, index 7 is C1.
struct KpLattice {
  HopfData kp = kac_paljutkin();
  std::vector<Coideal> links;

  KpLattice() {
    const KpNamed n = kp_named_objects(kp);
    for (int i = 0; i < 8; ++i) {
      links.push_back(coideal_from_state(kp, n.rho[i], "L" + std::to_string(i + 1)));
      attach_integral(kp, links.back());
    }
  }
  std::vector<Coideal> chain(std::initializer_list<int> one_based) const {
    std::vector<Coideal> out;
    for (int i : one_based) out.push_back(links[i - 1]);
    return out;
  }
};

// C[H] inside C[G] for the subgroup generated by `gen`.
Coideal subgroup_coideal(const HopfData& cg, const FiniteGroupTable& g, int gen) {
  std::vector<Vec> vecs;
  int x = g.identity();
  do {
    vecs.push_back(group_element(cg, g, x).coords());
    x = g.mul(x, gen);
  } while (x != g.identity());
  return make_coideal(cg, span(cg.dim(), vecs), "C[<" + g.element_name(gen) + ">]");
}

}  // namespace

TEST_CASE("relative centers") {
  KpLattice f;
  const Subspace z = relative_center(f.kp, f.links[0].subspace);
  CHECK(z.dim() == 5);
  CHECK(z.contains((f.kp.basis(kA11) + f.kp.basis(kA22)).coords()));
  for (std::size_t e : {kE1, kE2, kE3, kE4}) CHECK(z.contains(f.kp.basis(e).coords()));
  CHECK(relative_center(f.kp, f.links[4].subspace) == f.links[4].subspace);
  CHECK(relative_center(f.kp, f.links[7].subspace) == f.links[7].subspace);
  const Subspace off = span(8, {f.kp.basis(kA12).coords(), f.kp.basis(kA21).coords()});
  CHECK(code_of([&] { relative_center(f.kp, off); }) == ErrorCode::kPrecondition);
}

TEST_CASE("solvable steps") {
  KpLattice f;
  SeriesStep s = check_solvable_step(f.kp, f.links[4], f.links[1]);
  CHECK(*s.integral_central);
  CHECK(*s.adjoint_triviality);
  s = check_solvable_step(f.kp, f.links[5], f.links[3]);
  CHECK(s.passed());
  // p6 (e2 + e3) = 0.
  CHECK((*f.links[5].integral * (f.kp.basis(kE2) + f.kp.basis(kE3))).is_zero());
  s = check_solvable_step(f.kp, f.links[7], f.links[4]);
  CHECK(s.passed());
  CHECK(*f.links[7].integral == f.kp.unit);

  Coideal bare = f.links[4];
  bare.integral.reset();
  CHECK(code_of([&] { check_solvable_step(f.kp, bare, f.links[1]); }) == ErrorCode::kPrecondition);
  CHECK(code_of([&] { check_solvable_step(f.kp, f.links[1], f.links[4]); }) == ErrorCode::kPrecondition);
}

TEST_CASE("solvable series") {
  KpLattice f;
  CHECK(check_solvable_series(f.kp, f.chain({8, 5, 4, 1})).verdict);
  CHECK(check_solvable_series(f.kp, f.chain({8, 6, 4, 1})).verdict);
  const SeriesReport bad = check_solvable_series(f.kp, f.chain({8, 2, 1}));
  CHECK_FALSE(bad.verdict);
  for (const auto& step : bad.steps) CHECK(step.passed() != step.witness.has_value());
  CHECK(code_of([&] { check_solvable_series(f.kp, f.chain({5, 4, 1})); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { check_solvable_series(f.kp, f.chain({8, 4, 5, 1})); }) == ErrorCode::kInvalidArgument);

  const HopfData z2 = group_algebra(FiniteGroupTable::from_name("z2"));
  CHECK(check_solvable_series(z2, {trivial_coideal(z2), full_coideal(z2)}).verdict);
}

TEST_CASE("nilpotent series") {
  KpLattice f;
  const SeriesReport rep = check_nilpotent_series(f.kp, f.chain({8, 5, 4, 1}));
  CHECK(rep.verdict);
  for (const auto& s : rep.steps) {
    CHECK(*s.normal);
    CHECK(*s.corner_closed);
    CHECK(*s.corner_central);
  }
  const SeriesReport bad = check_nilpotent_series(f.kp, f.chain({8, 6, 4, 1}));
  CHECK_FALSE(bad.verdict);
  REQUIRE(bad.steps[0].witness);
  CHECK(bad.steps[0].witness->find("L6") != std::string::npos);

  for (int k : {3, 4}) {
    CAPTURE(k);
    const HopfData s = sekine(k);
    const SekineNamed n = sekine_named_objects(s, k);
    const std::vector<Coideal> chain{trivial_coideal(s), coideal_from_state(s, n.h[k - 1], "L'k"),
                                     coideal_from_state(s, n.h[0], "L'1"), full_coideal(s)};
    CHECK(check_nilpotent_series(s, chain).verdict);
    CHECK(check_solvable_series(s, chain).verdict);
  }
  const HopfData cz2 = function_algebra(FiniteGroupTable::from_name("z2"));
  CHECK(check_nilpotent_series(cz2, {trivial_coideal(cz2), full_coideal(cz2)}).verdict);
}

TEST_CASE("chain enumeration") {
  KpLattice f;
  const auto chains = enumerate_chains(f.links, 7, 0);
  std::size_t longest = 0;
  for (const auto& c : chains) longest = std::max(longest, c.size());
  CHECK(longest == 4);
  CHECK(chains.size() == 12);
  int through_l2 = 0;
  for (const auto& c : chains) {
    if (c.size() == 4 && std::find(c.begin(), c.end(), 1) != c.end()) {
      ++through_l2;
      CHECK(c == std::vector<std::size_t>{7, 4, 1, 0});
    }
  }
  CHECK(through_l2 == 1);
  // Sorted by length, then lexicographically.
  for (std::size_t i = 1; i < chains.size(); ++i) {
    CHECK((chains[i - 1].size() < chains[i].size() ||
           (chains[i - 1].size() == chains[i].size() && chains[i - 1] < chains[i])));
  }
  // L6 and L5 are incomparable: no chain passes through both.
  const auto two = enumerate_chains({f.links[7], f.links[5], f.links[4], f.links[0]}, 0, 3);
  for (const auto& c : two) CHECK(c.size() <= 3);
}

TEST_CASE("classification of length-4 solvable series") {
  KpLattice f;
  const Classification cl = classify_solvable_series(f.kp, f.links, 7, 0);
  CHECK(cl.max_length == 4);
  CHECK(cl.candidates == 5);
  const std::vector<std::vector<std::size_t>> expected{
      {7, 4, 1, 0}, {7, 4, 2, 0}, {7, 4, 3, 0}, {7, 5, 3, 0}, {7, 6, 3, 0}};
  CHECK(cl.chains == expected);
  // The nilpotency chain is among them.
  CHECK(std::find(cl.chains.begin(), cl.chains.end(), std::vector<std::size_t>{7, 4, 3, 0}) != cl.chains.end());

  const HopfData z2 = group_algebra(FiniteGroupTable::from_name("z2"));
  const Classification one = classify_solvable_series(z2, {trivial_coideal(z2), full_coideal(z2)}, 0, 1);
  CHECK(one.chains == std::vector<std::vector<std::size_t>>{{0, 1}});
}

TEST_CASE("verdicts do not depend on the spanning set") {
  KpLattice f;
  std::vector<Coideal> chain = f.chain({8, 5, 4, 1});
  // Re-present L4 through a different spanning set.
  std::vector<Vec> vecs;
  const auto& basis = chain[2].subspace.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Vec v = basis[i];
    if (i + 1 < basis.size()) axpy(v, CycNum(3), basis[i + 1]);
    vecs.push_back(v);
  }
  Coideal again = make_coideal(f.kp, span(8, vecs), "L4'");
  CHECK(again.subspace == chain[2].subspace);
  chain[2] = again;
  CHECK(check_solvable_series(f.kp, chain).verdict);
  CHECK(check_nilpotent_series(f.kp, chain).verdict);
}

TEST_CASE("subgroup chains of abelian p-groups are solvable") {
  struct Case {
    const char* group;
    std::vector<int> gens;  // generators of the intermediate subgroups, increasing
  };
  const auto z4 = FiniteGroupTable::from_name("z4");
  const auto z8 = FiniteGroupTable::from_name("z8");
  const auto z9 = FiniteGroupTable::from_name("z9");
  for (const auto* g : {&z4, &z8, &z9}) {
    CAPTURE(g->name());
    const HopfData cg = group_algebra(*g);
    std::vector<Coideal> chain{trivial_coideal(cg)};
    // Subgroups generated by p^j for j descending.
    const int n = g->order();
    const int p = n % 2 == 0 ? 2 : 3;
    for (int step = n / p; step > 1; step /= p) chain.push_back(subgroup_coideal(cg, *g, step));
    chain.push_back(full_coideal(cg));
    CHECK(check_solvable_series(cg, chain).verdict);
    CHECK(check_nilpotent_series(cg, chain).verdict);
  }
}
