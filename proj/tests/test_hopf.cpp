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
#include "fqg/descriptor.hpp"
#include "fqg/error.hpp"
#include "fqg/hopf.hpp"
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

}  // namespace

TEST_CASE("signature indexing") {
  AlgSignature s({1, 2});
  CHECK(s.dim() == 5);
  CHECK(s.index(1, 0, 1) == 2);
  CHECK(s.star_index(2) == 3);
  CHECK(s.basis_product(1, 2) == std::optional<std::size_t>(2));
  CHECK_FALSE(s.basis_product(2, 2).has_value());
  CHECK(s.basis_product(2, 3) == std::optional<std::size_t>(1));
  CHECK_FALSE(s.basis_product(0, 1).has_value());
}

TEST_CASE("Kac-Paljutkin passes every exact axiom") {
  const HopfData kp = kac_paljutkin();
  CHECK(kp.dim() == 8);
  const AxiomReport rep = verify_hopf(kp);
  CHECK(rep.all_passed());
  for (const auto& r : rep.results) {
    if (!r.informational) CHECK_MESSAGE(r.passed, r.axiom);
  }
  CHECK_FALSE(rep.first_failure().has_value());
}

TEST_CASE("Kac-Paljutkin Haar state is the published one") {
  const HopfData kp = kac_paljutkin();
  const Functional h = solve_haar(kp);
  for (std::size_t e : {kE1, kE2, kE3, kE4}) CHECK(h.at(e) == q(1, 8));
  CHECK(h.at(kA11) == q(1, 4));
  CHECK(h.at(kA22) == q(1, 4));
  CHECK(h.at(kA12).is_zero());
  CHECK(h.at(kA21).is_zero());
  REQUIRE(kp.haar);
  CHECK(*kp.haar == h);
  const HaarReport rep = verify_haar(kp, h);
  CHECK(rep.invariance_passed());
  CHECK(rep.hermitian);
  CHECK(rep.positivity.passed);
}

TEST_CASE("Kac-Paljutkin structure values") {
  const HopfData kp = kac_paljutkin();
  // Delta(e_2) has the twisted a-part.
  const TensorElem d = kp.delta[kE2];
  CHECK(d.get(kE1, kE2) == CycNum(1));
  CHECK(d.get(kA11, kA22) == q(1, 2));
  CHECK(d.get(kA21, kA12) == CycNum::root_of_unity(4, 1) * q(1, 2));
  CHECK(kp.counit[kE1] == CycNum(1));
  CHECK(kp.counit[kA11].is_zero());
  // S^2 = id.
  for (std::size_t i = 0; i < kp.dim(); ++i) {
    CHECK(antipode_of(kp, antipode_of(kp, kp.basis(i))) == kp.basis(i));
  }
}

TEST_CASE("injected faults are caught with a witness") {
  HopfData kp = kac_paljutkin();
  SUBCASE("coassociativity") {
    kp.delta[kE3].add(kE2, kE2, CycNum(1));
    const AxiomReport rep = verify_hopf(kp);
    CHECK_FALSE(rep.all_passed());
    REQUIRE(rep.first_failure());
    const AxiomResult* r = rep.find("coassociativity");
    REQUIRE(r);
    CHECK_FALSE(r->passed);
    REQUIRE(r->witness);
    // Delta(e1) contains e3 (x) e3, so the first failing element is e1.
    CHECK(*r->witness == "e1");
  }
  SUBCASE("antipode") {
    kp.antipode[kA12] = kp.basis(kA12);
    const AxiomReport rep = verify_hopf(kp);
    CHECK_FALSE(rep.find("antipode_left")->passed);
  }
  SUBCASE("counit") {
    kp.counit[kE2] = CycNum(1);
    CHECK_FALSE(verify_hopf(kp).find("counit_left")->passed);
  }
  SUBCASE("stop at first failure") {
    kp.delta[kE3].add(kE2, kE2, CycNum(1));
    const AxiomReport rep = verify_hopf(kp, VerifyOptions{true});
    CHECK_FALSE(rep.results.back().passed);
  }
}

TEST_CASE("Sekine quantum groups") {
  for (int k : {3, 4, 5}) {
    CAPTURE(k);
    const HopfData s = sekine(k);
    CHECK(s.dim() == static_cast<std::size_t>(2 * k * k));
    CHECK(verify_hopf(s).all_passed());
    const Functional h = solve_haar(s);
    CHECK(h.at(sekine_d(k, 0, 1)) == q(1, 2L * k * k));
    CHECK(h.at(sekine_e(k, 1, 1)) == q(1, 2L * k));
    CHECK(h.at(sekine_e(k, 0, 1)).is_zero());
    CHECK(*s.haar == h);
    // The printed table is recorded as failing; the corrected one is used.
    bool noted = false;
    for (const auto& n : s.notes) noted = noted || n.find("fails") != std::string::npos;
    CHECK(noted);
  }
  CHECK(code_of([] { sekine(1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("convolution with the counit is the identity") {
  const HopfData kp = kac_paljutkin();
  const Functional eps = counit_functional(kp);
  const Functional h = *kp.haar;
  CHECK(convolve(kp, eps, h) == h);
  CHECK(convolve(kp, h, eps) == h);
  CHECK(convolve(kp, h, h) == h);
}

TEST_CASE("group tables") {
  const auto z2z2 = FiniteGroupTable::from_name("z2xz2");
  CHECK(z2z2.order() == 4);
  CHECK(z2z2.is_abelian());
  const auto s3 = FiniteGroupTable::from_name("s3");
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(code_of([] { FiniteGroupTable("bad", {{0, 1}, {0, 1}}); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { FiniteGroupTable::from_name("q8x"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("function algebras C(G)") {
  for (const char* name : {"z2", "z3", "z4", "z2xz2", "z5", "z6", "z7", "z8", "z2xz4", "z2xz2xz2", "s3"}) {
    CAPTURE(name);
    const auto g = FiniteGroupTable::from_name(name);
    const HopfData h = function_algebra(g);
    CHECK(verify_hopf(h).all_passed());
    const Functional haar = solve_haar(h);
    for (std::size_t i = 0; i < h.dim(); ++i) CHECK(haar.at(i) == q(1, g.order()));
  }
}

TEST_CASE("group algebras C[G]") {
  for (const char* name : {"z2", "z3", "z4", "z2xz2", "z5", "z6", "z7", "z8", "z2xz4", "z2xz2xz2"}) {
    CAPTURE(name);
    const auto g = FiniteGroupTable::from_name(name);
    const HopfData h = group_algebra(g);
    CHECK(verify_hopf(h).all_passed());
    for (std::size_t i = 0; i < h.dim(); ++i) CHECK(flip(h.delta[i]) == h.delta[i]);
    const Functional haar = solve_haar(h);
    for (int a = 0; a < g.order(); ++a) {
      const AlgElement x = group_element(h, g, a);
      CHECK(haar(x) == CycNum(a == g.identity() ? 1 : 0));
      // Group-like: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^-1.
      CHECK(delta_of(h, x) == TensorElem::pure(x, x));
      CHECK(counit_of(h, x) == CycNum(1));
      CHECK(antipode_of(h, x) == group_element(h, g, g.inverse(a)));
      for (int b = 0; b < g.order(); ++b) CHECK(x * group_element(h, g, b) == group_element(h, g, g.mul(a, b)));
    }
  }
  CHECK(code_of([] { group_algebra(FiniteGroupTable::from_name("s3")); }) == ErrorCode::kUnsupported);
}

TEST_CASE("descriptor round trip") {
  for (const HopfData& h : {kac_paljutkin(), sekine(3), group_algebra(FiniteGroupTable::from_name("z4"))}) {
    const Json j = hopf_to_json(h);
    const Json again = Json::parse(j.dump());
    const LoadedDescriptor d = load_descriptor(again);
    CHECK(d.axioms.all_passed());
    CHECK(d.hopf.sig->blocks() == h.sig->blocks());
    for (std::size_t i = 0; i < h.dim(); ++i) {
      CHECK(d.hopf.delta[i].coeffs().size() == h.delta[i].coeffs().size());
      CHECK(tensor_to_json(d.hopf.delta[i]) == tensor_to_json(h.delta[i]));
      CHECK(d.hopf.antipode[i].coords() == h.antipode[i].coords());
    }
    CHECK(d.hopf.counit == h.counit);
    REQUIRE(d.hopf.haar);
    CHECK(*d.hopf.haar == *h.haar);
    CHECK(hopf_to_json(d.hopf).dump() == j.dump());
  }
}

TEST_CASE("descriptor errors") {
  CHECK(code_of([] { hopf_from_json(Json::parse("[1]")); }) == ErrorCode::kParse);
  CHECK(code_of([] { hopf_from_json(Json::parse(R"({"blocks":[1],"delta":{},"counit":{}})")); }) == ErrorCode::kParse);
  CHECK(code_of([] {
          hopf_from_json(Json::parse(R"({"blocks":[1],"delta":{"0":[[0,3,"1"]]},"counit":{},"antipode":{}})"));
        }) == ErrorCode::kDimension);
  CHECK(code_of([] {
          hopf_from_json(Json::parse(R"({"blocks":[1],"delta":{"0":[[0,0,"1 2"]]},"counit":{},"antipode":{}})"));
        }) == ErrorCode::kParse);
  CHECK(code_of([] { read_json_file("/nonexistent/path.json"); }) == ErrorCode::kIo);
  // A corrupted Delta entry loads but fails verification.
  Json j = hopf_to_json(kac_paljutkin());
  j["delta"]["2"].push_back(Json::array({1, 1, "1"}));
  const LoadedDescriptor d = load_descriptor(j);
  CHECK_FALSE(d.axioms.all_passed());
}
