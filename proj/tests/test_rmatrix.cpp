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
#include "fqg/descriptor.hpp"
#include "fqg/error.hpp"
#include "fqg/models.hpp"
#include "fqg/rmatrix.hpp"

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

const CycNum kI = CycNum::root_of_unity(4, 1);

std::vector<KpFamily> verified_families() {
  std::vector<KpFamily> out;
  for (const auto& f : kp_published_families()) {
    if (f.case_index != 4) out.push_back(f);
  }
  for (const auto& f : kp_published_families(-kI)) {
    if (f.case_index == 4) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("leg numbering") {
  const HopfData kp = kac_paljutkin();
  const AlgElement x = kp.basis(kA12), y = kp.basis(kE3);
  const TensorElem t = TensorElem::pure(x, y);
  CHECK(leg_embed(t, "12") == TensorElem::pure(x, y, kp.unit));
  CHECK(leg_embed(t, "13") == TensorElem::pure(x, kp.unit, y));
  CHECK(leg_embed(t, "23") == TensorElem::pure(kp.unit, x, y));
  CHECK(leg_embed(TensorElem::unit(kp.sig, 2), "13") == TensorElem::unit(kp.sig, 3));
  const TensorElem two = t + CycNum(3) * TensorElem::pure(y, y);
  CHECK(leg_embed(two, "23") == leg_embed(t, "23") + CycNum(3) * leg_embed(TensorElem::pure(y, y), "23"));
  CHECK(code_of([&] { leg_embed(t, "21"); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { leg_embed(TensorElem::unit(kp.sig, 3), "12"); }) == ErrorCode::kDimension);
}

TEST_CASE("published families") {
  const HopfData kp = kac_paljutkin();
  for (const auto& f : kp_published_families()) {
    CAPTURE(f.label);
    const RReport rep = verify_rmatrix(kp, {kp_r_from_params(kp, f.params), RProvenance::kPublishedFamily, f.label});
    CHECK(rep.invertible);
    CHECK(rep.intertwines);
    CHECK(rep.counit_normalized);
    CHECK(rep.unitary);
    // The last case as printed (lambda^2 = sqrt(-1)) fails both hexagons.
    CHECK(rep.hexagon1 == (f.case_index != 4));
    CHECK(rep.hexagon2 == (f.case_index != 4));
  }
  for (const auto& f : verified_families()) {
    CAPTURE(f.label);
    const TensorElem r = kp_r_from_params(kp, f.params);
    const RReport rep = verify_rmatrix(kp, {r, RProvenance::kPublishedFamily, f.label});
    CHECK(rep.quasitriangular());
    CHECK(rep.counit_normalized);
    CHECK(rep.unitary);
    CHECK(rep.yang_baxter);
    CHECK(tensor_mul(r, tensor_star(r)) == TensorElem::unit(kp.sig, 2));
    REQUIRE(rep.inverse);
    CHECK(*rep.inverse == tensor_star(r));
    CHECK(rep.minimal_is_hopf);
    const MinimalSubalgebra ar = minimal_subalgebra(kp, r);
    if (f.case_index <= 2) {
      CHECK(ar.subspace.dim() < 8);
      CHECK_FALSE(ar.subspace.contains(kp.basis(kA12).coords()));
      CHECK_FALSE(ar.subspace.contains(kp.basis(kA21).coords()));
      CHECK_FALSE(rep.minimal);
    } else {
      CHECK(ar.subspace.dim() == 8);
      CHECK(rep.minimal);
    }
    // Scaling by 2 breaks the counit normalization.
    const RReport twice = verify_rmatrix(kp, {CycNum(2) * r, RProvenance::kUserSupplied, "2R"});
    CHECK_FALSE(twice.counit_normalized);
  }
}

TEST_CASE("solver reproduces the eight R-matrices") {
  const HopfData kp = kac_paljutkin();
  const RSolveResult res = solve_kp_rmatrices(kp);
  CHECK(res.unknowns == 64);
  REQUIRE(res.solutions.size() == 8);
  std::set<std::string> solved, expected;
  for (const auto& s : res.solutions) {
    CHECK(s.provenance == RProvenance::kAnsatzSolved);
    const auto p = kp_r_params(kp, s.tensor);
    REQUIRE(p);
    CHECK(p->a == kp_r_a_matrix());
    solved.insert(tensor_to_json(s.tensor).dump());
  }
  for (const auto& f : verified_families()) expected.insert(tensor_to_json(kp_r_from_params(kp, f.params)).dump());
  CHECK(solved == expected);
  // Labels follow the published order.
  CHECK(res.solutions[0].label == "case1(+)");
  CHECK(res.solutions[2].label.rfind("case2", 0) == 0);
  CHECK(res.solutions[7].label.rfind("case4", 0) == 0);

  const auto a = kp_r_a_matrix();
  CHECK(a[1][1] == CycNum(-1));
  CHECK(a[3][0] == CycNum(1));
}

TEST_CASE("family parameters") {
  const HopfData kp = kac_paljutkin();
  const RSolveResult res = solve_kp_rmatrices(kp);
  int case1 = 0, case3 = 0;
  for (const auto& s : res.solutions) {
    const KpRParams p = *kp_r_params(kp, s.tensor);
    if (p.b[1] == CycNum(-1) && p.b[2] == CycNum(-1)) {
      ++case1;
      CHECK(p.b[3] == CycNum(1));
      for (const auto& c : p.c) CHECK(c == CycNum(1));
      CHECK(p.d[0] == p.d[1]);
      CHECK((p.d[0] == CycNum(1) || p.d[0] == CycNum(-1)));
      CHECK(p.d[2].is_zero());
      CHECK(p.d[3].is_zero());
    }
    if (p.b[1] == CycNum(-1) && p.b[2] == CycNum(1)) {
      ++case3;
      const CycNum lambda = p.d[2];
      CHECK(lambda * lambda == kI);
      CHECK(p.d[3] == -kI * lambda);
    }
  }
  CHECK(case1 == 2);
  CHECK(case3 == 2);
}

TEST_CASE("generic solver on C[Z2]") {
  const auto g = FiniteGroupTable::from_name("z2");
  const HopfData cg = group_algebra(g);
  const AlgElement one = cg.unit, x = group_element(cg, g, 1);
  const TensorElem trivial = TensorElem::unit(cg.sig, 2);
  const TensorElem twisted = CycNum(Rational(1, 2)) * (TensorElem::pure(one, one) + TensorElem::pure(one, x) +
                                                       TensorElem::pure(x, one) - TensorElem::pure(x, x));
  const RSolveResult res = solve_rmatrices(cg);
  REQUIRE(res.solutions.size() == 2);
  std::set<std::string> got{tensor_to_json(res.solutions[0].tensor).dump(), tensor_to_json(res.solutions[1].tensor).dump()};
  CHECK(got == std::set<std::string>{tensor_to_json(trivial).dump(), tensor_to_json(twisted).dump()});
  const RReport rep = verify_rmatrix(cg, {trivial, RProvenance::kUserSupplied, "1(x)1"});
  CHECK(rep.quasitriangular());
  CHECK(minimal_subalgebra(cg, trivial).subspace.dim() == 1);
  CHECK(code_of([&] { solve_kp_rmatrices(cg); }) == ErrorCode::kUnsupported);
}

TEST_CASE("solver bound") {
  const HopfData kp = kac_paljutkin();
  CHECK(code_of([&] { solve_kp_rmatrices(kp, RSolveOptions{2}); }) == ErrorCode::kResource);
}

TEST_CASE("singular tensors are not invertible") {
  const HopfData kp = kac_paljutkin();
  TensorElem r = TensorElem::unit(kp.sig, 2);
  r.add(kA11, kA11, CycNum(-1));
  CHECK_FALSE(tensor_inverse(r).has_value());
  const RReport rep = verify_rmatrix(kp, {r, RProvenance::kUserSupplied, "singular"});
  CHECK_FALSE(rep.invertible);
  CHECK_FALSE(rep.quasitriangular());
  CHECK(rep.witnesses.count("invertible") == 1);
}

TEST_CASE("exact square roots") {
  CHECK(*sqrt_in_field(kI, 8) == CycNum::root_of_unity(8, 1));
  const auto r2 = sqrt_in_field(CycNum(2), 8);
  REQUIRE(r2);
  CHECK(*r2 * *r2 == CycNum(2));
  CHECK_FALSE(sqrt_in_field(CycNum(3), 8).has_value());
  const auto r3 = sqrt_in_field(CycNum(3), 12);
  REQUIRE(r3);
  CHECK(*r3 * *r3 == CycNum(3));
  CHECK(*sqrt_in_field(CycNum(Rational(9, 4)), 1) == CycNum(Rational(3, 2)));
  CHECK(code_of([] { sqrt_in_field(kI, 6); }) == ErrorCode::kInvalidArgument);
}
