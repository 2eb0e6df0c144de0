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
#include "fqg/coideal.hpp"
#include "fqg/error.hpp"
#include "fqg/models.hpp"

using namespace fqg;

namespace {

CycNum q(long n, long d) { return CycNum(Rational(n, d)); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no fqg::Error thrown");
  return ErrorCode::kInvalidArgument;
}

struct KpFixture {
  HopfData kp = kac_paljutkin();
  KpNamed named = kp_named_objects(kp);
  std::vector<Coideal> lattice;

  KpFixture() {
    for (int i = 0; i < 8; ++i) lattice.push_back(coideal_from_state(kp, named.rho[i], "L" + std::to_string(i + 1)));
  }
  AlgElement b(std::size_t i) const { return kp.basis(i); }
};

}  // namespace

TEST_CASE("idempotent states of Kac-Paljutkin") {
  KpFixture f;
  for (int i = 0; i < 8; ++i) {
    CAPTURE(i + 1);
    CHECK(is_idempotent_state(f.kp, f.named.rho[i]));
  }
  CHECK(is_idempotent_state(f.kp, counit_functional(f.kp)));
  Functional mix(f.kp.sig);
  mix.values()[kE1] = q(3, 4);
  mix.values()[kE2] = q(1, 4);
  CHECK_FALSE(is_idempotent_state(f.kp, mix));
  // (phi (x) phi) Delta(e2) = 2 (3/4)(1/4).
  CHECK(convolve(f.kp, mix, mix).at(kE2) == q(3, 8));
  Functional half(f.kp.sig);
  half.values()[kE1] = q(1, 2);
  CHECK(code_of([&] { is_idempotent_state(f.kp, half); }) == ErrorCode::kPrecondition);
}

TEST_CASE("state order") {
  KpFixture f;
  const Functional eps = counit_functional(f.kp);
  for (const auto& rho : f.named.rho) CHECK(state_leq(f.kp, eps, rho));
  CHECK(state_leq(f.kp, f.named.rho[1], f.named.rho[4]));
  CHECK_FALSE(state_leq(f.kp, f.named.rho[1], f.named.rho[2]));
  Functional mix(f.kp.sig);
  mix.values()[kE1] = q(3, 4);
  mix.values()[kE2] = q(1, 4);
  CHECK(code_of([&] { state_leq(f.kp, mix, eps); }) == ErrorCode::kPrecondition);
  // phi <= psi exactly when L_psi sits inside L_phi.
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      CAPTURE(i + 1);
      CAPTURE(j + 1);
      CHECK(state_leq(f.kp, f.named.rho[i], f.named.rho[j]) == f.lattice[i].subspace.contains(f.lattice[j].subspace));
    }
  }
}

TEST_CASE("coideals from states") {
  KpFixture f;
  const Coideal& l5 = f.lattice[4];
  CHECK(l5.dim() == 2);
  CHECK(l5.subspace == span(8, {(f.b(kE1) + f.b(kE2) + f.b(kE3) + f.b(kE4)).coords(), (f.b(kA11) + f.b(kA22)).coords()}));
  CHECK(coideal_from_state(f.kp, counit_functional(f.kp)).dim() == 8);
  CHECK(f.lattice[7].subspace == trivial_coideal(f.kp).subspace);
  const std::vector<std::size_t> dims{8, 4, 4, 4, 2, 2, 2, 1};
  for (int i = 0; i < 8; ++i) {
    CAPTURE(i + 1);
    const Coideal& c = f.lattice[i];
    CHECK(c.dim() == dims[i]);
    CHECK(c.is_unital.value());
    CHECK(c.is_star_closed.value());
    CHECK(c.is_coideal.value());
    CHECK(is_multiplicatively_closed(f.kp, c.subspace));
    REQUIRE(c.source_state);
    CHECK(*c.source_state == f.named.rho[i]);
    // Printed spans agree except for L3.
    CHECK((c.subspace == f.named.listed_L[i]) == (i != 2));
  }
}

TEST_CASE("group-like projections and their states") {
  KpFixture f;
  for (int i = 0; i < 8; ++i) {
    CAPTURE(i + 1);
    CHECK(is_group_like_projection(f.kp, f.named.p[i]));
    CHECK(state_from_projection(f.kp, f.named.p[i]) == f.named.rho[i]);
  }
  CHECK(is_group_like_projection(f.kp, f.kp.unit));
  CHECK_FALSE(is_group_like_projection(f.kp, f.b(kA11)));
  CHECK(code_of([&] { state_from_projection(f.kp, f.b(kA11)); }) == ErrorCode::kPrecondition);
  HopfData bare = f.kp;
  bare.haar.reset();
  CHECK(code_of([&] { state_from_projection(bare, f.named.p[0]); }) == ErrorCode::kPrecondition);
}

TEST_CASE("integrals") {
  KpFixture f;
  for (int i = 0; i < 8; ++i) {
    CAPTURE(i + 1);
    bool proj = false;
    const AlgElement l = find_integral(f.kp, f.lattice[i], &proj);
    CHECK(l == f.named.p[i]);
    CHECK(proj);
    // The triangle state -> coideal -> integral -> state closes.
    CHECK(state_from_projection(f.kp, l) == f.named.rho[i]);
  }
  CHECK(find_integral(f.kp, f.lattice[3]) == f.b(kE1) + f.b(kE4));
  // The integral of A is e1, the Haar element of A.
  CHECK(find_integral(f.kp, full_coideal(f.kp)) == f.b(kE1));

  Coideal odd;
  odd.subspace = span(8, {f.b(kA12).coords(), f.b(kA21).coords()});
  CHECK(code_of([&] { find_integral(f.kp, odd); }) == ErrorCode::kStructure);
  Coideal not_coideal = make_coideal(f.kp, span(8, {f.b(kE2).coords()}));
  CHECK_FALSE(not_coideal.is_coideal.value());
  CHECK(code_of([&] { find_integral(f.kp, not_coideal); }) == ErrorCode::kPrecondition);
}

TEST_CASE("adjoint action") {
  KpFixture f;
  CHECK(adjoint_action(f.kp, f.b(kE1), f.b(kA11)) == q(1, 2) * (f.b(kA11) + f.b(kA22)));
  for (std::size_t i = 0; i < 8; ++i) CHECK(adjoint_action(f.kp, f.kp.unit, f.b(i)) == f.b(i));
  // a . 1 = eps(a) 1.
  for (std::size_t i = 0; i < 8; ++i) CHECK(adjoint_action(f.kp, f.b(i), f.kp.unit) == f.kp.counit[i] * f.kp.unit);

  const int k = 4;
  const HopfData s = sekine(k);
  AlgElement all(s.sig);
  for (int r = 0; r < k; ++r)
    for (int t = 0; t < k; ++t) all[sekine_d(k, r, t)] = CycNum(1);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const AlgElement got = adjoint_action(s, s.basis(sekine_d(k, a, b)), all);
      CHECK(got == CycNum(a == 0 && b == 0 ? 1 : 0) * all);
    }
  }
}

TEST_CASE("normality") {
  KpFixture f;
  std::vector<bool> normal;
  for (auto& c : f.lattice) normal.push_back(is_normal_coideal(f.kp, c));
  CHECK(normal[3]);
  CHECK(normal[4]);
  CHECK(normal[0]);
  CHECK(normal[7]);
  CHECK_FALSE(normal[5]);
  CHECK_FALSE(normal[6]);
  std::optional<NormalityWitness> w;
  Coideal l6 = f.lattice[5];
  CHECK_FALSE(is_normal_coideal(f.kp, l6, &w));
  REQUIRE(w);
  CHECK(w->a == kE1);
  CHECK(l6.is_normal.value() == false);
}

TEST_CASE("write-once flags") {
  Flag flag;
  CHECK_FALSE(flag.known());
  CHECK(code_of([&] { (void)flag.value(); }) == ErrorCode::kPrecondition);
  flag.set(true);
  flag.set(true);
  CHECK(flag.value());
  CHECK(code_of([&] { flag.set(false); }) == ErrorCode::kStructure);
}

TEST_CASE("Sekine idempotent states") {
  for (int k : {3, 4, 5}) {
    CAPTURE(k);
    const HopfData s = sekine(k);
    const SekineNamed n = sekine_named_objects(s, k);
    for (int i = 0; i < k; ++i) {
      CAPTURE(i + 1);
      CHECK(is_idempotent_state(s, n.h[i]));
      Coideal c = coideal_from_state(s, n.h[i]);
      CHECK(c.subspace == n.listed_L[i]);
      CHECK(find_integral(s, c) == n.p[i]);
      CHECK(state_from_projection(s, n.p[i]) == n.h[i]);
      if (i == 0 || i == k - 1) CHECK(is_normal_coideal(s, c));
    }
    CHECK(state_from_projection(s, n.d00) == counit_functional(s));
    Coideal one = trivial_coideal(s);
    CHECK(is_normal_coideal(s, one));
  }
}
