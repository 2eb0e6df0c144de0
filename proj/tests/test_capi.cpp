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

// Exercises the shared library through its C header only.

#include <json.hpp>
#include <string>

#include "doctest.h"
#include "fqg/fqg.h"

namespace {

using Json = nlohmann::json;

Json parse(fqg_report* r) { return Json::parse(fqg_report_json(r, -1)); }

// The report without its timing section.
Json comparable(fqg_report* r) {
  Json j = parse(r);
  j.erase("timing");
  return j;
}

}  // namespace

TEST_CASE("status codes and errors") {
  CHECK(std::string(fqg_status_name(FQG_OK)) == "ok");
  CHECK(std::string(fqg_status_name(FQG_ERR_IO)) == "i/o error");
  fqg_algebra* a = nullptr;
  CHECK(fqg_algebra_sekine(1, &a) == FQG_ERR_INVALID_ARGUMENT);
  CHECK(a == nullptr);
  CHECK(std::string(fqg_last_error()).size() > 0);
  CHECK(fqg_algebra_kp(nullptr) == FQG_ERR_INVALID_ARGUMENT);
  CHECK(fqg_algebra_load("/nonexistent/descriptor.json", &a) == FQG_ERR_IO);
  CHECK(fqg_algebra_group("s3", &a) == FQG_ERR_UNSUPPORTED);
  CHECK(fqg_algebra_functions("q8x", &a) == FQG_ERR_INVALID_ARGUMENT);
  fqg_report* r = nullptr;
  CHECK(fqg_classdims(7, 5, nullptr, 0, &r) == FQG_ERR_INVALID_ARGUMENT);
  CHECK(fqg_classdims(9, 3, nullptr, 0, &r) == FQG_ERR_INVALID_ARGUMENT);
  CHECK(r == nullptr);
  // Success clears the message.
  REQUIRE(fqg_algebra_kp(&a) == FQG_OK);
  CHECK(std::string(fqg_last_error()).empty());
  size_t dim = 0;
  CHECK(fqg_algebra_dim(a, &dim) == FQG_OK);
  CHECK(dim == 8);
  CHECK(fqg_series(a, "bogus", &r) == FQG_ERR_INVALID_ARGUMENT);
  CHECK(fqg_verify(a, "hopf,unknown", nullptr, nullptr, &r) == FQG_ERR_INVALID_ARGUMENT);
  fqg_algebra_free(a);
  fqg_algebra_free(nullptr);
  fqg_report_free(nullptr);
  CHECK(fqg_report_passed(nullptr) == 0);
}

TEST_CASE("verify kp") {
  fqg_algebra* a = nullptr;
  REQUIRE(fqg_algebra_kp(&a) == FQG_OK);
  fqg_options opt;
  fqg_options_init(&opt);
  fqg_report* r = nullptr;
  REQUIRE(fqg_verify(a, "all", nullptr, &opt, &r) == FQG_OK);
  CHECK(fqg_report_passed(r) == 1);
  const Json j = parse(r);
  std::vector<std::string> claims;
  for (const auto& c : j["results"]) claims.push_back(c["claim"]);
  CHECK(std::find(claims.begin(), claims.end(), "five solvable series") != claims.end());
  CHECK(std::find(claims.begin(), claims.end(), "eight R-matrices") != claims.end());
  CHECK(fqg_report_text(r) == nullptr);

  // Same inputs, same report apart from timing.
  fqg_report* again = nullptr;
  REQUIRE(fqg_verify(a, "all", nullptr, &opt, &again) == FQG_OK);
  CHECK(comparable(r) == comparable(again));
  fqg_report_free(r);
  fqg_report_free(again);

  // The R-matrix bound is passed through.
  opt.candidate_bound = 2;
  CHECK(fqg_rmatrix_solve(a, &opt, &r) == FQG_ERR_RESOURCE);
  fqg_algebra_free(a);
}

TEST_CASE("sekine checks") {
  fqg_algebra* a = nullptr;
  REQUIRE(fqg_algebra_sekine(3, &a) == FQG_OK);
  fqg_report* r = nullptr;
  REQUIRE(fqg_verify(a, "hopf,haar,series-nilpotent", nullptr, nullptr, &r) == FQG_OK);
  CHECK(fqg_report_passed(r) == 1);
  fqg_report_free(r);
  // The rmatrix check needs Kac-Paljutkin or candidate tensors.
  CHECK(fqg_verify(a, "rmatrix", nullptr, nullptr, &r) == FQG_ERR_PRECONDITION);
  CHECK(fqg_rmatrix_solve(a, nullptr, &r) == FQG_ERR_UNSUPPORTED);
  REQUIRE(fqg_coideals(a, &r) == FQG_OK);
  const Json j = parse(r);
  CHECK(j["coideals"].size() == 5);
  for (const auto& c : j["coideals"]) CHECK(c["normal"] == true);
  CHECK(j["passed"] == true);
  fqg_report_free(r);
  fqg_algebra_free(a);

  // Kac-Paljutkin L6 is not normal; the report names a witness.
  REQUIRE(fqg_algebra_kp(&a) == FQG_OK);
  REQUIRE(fqg_coideals(a, &r) == FQG_OK);
  const Json kp = parse(r);
  CHECK(kp["coideals"][5]["label"] == "L6");
  CHECK(kp["coideals"][5]["normal"] == false);
  CHECK(kp["coideals"][5]["normality_witness"]["a"] == "e1");
  CHECK(kp["coideals"][2]["listed_span_matches"] == false);
  fqg_report_free(r);
  fqg_algebra_free(a);
}

TEST_CASE("descriptor round trip") {
  fqg_algebra* a = nullptr;
  REQUIRE(fqg_algebra_kp(&a) == FQG_OK);
  fqg_report* d = nullptr;
  REQUIRE(fqg_algebra_descriptor(a, &d) == FQG_OK);
  const Json desc = parse(d);
  CHECK(desc["name"] == "kac-paljutkin");
  fqg_report_free(d);
  fqg_algebra_free(a);
}

TEST_CASE("classdims and reproduce") {
  fqg_report* r = nullptr;
  const long forbidden[] = {1, 7, 3};
  REQUIRE(fqg_classdims(7, 3, forbidden, 3, &r) == FQG_OK);
  const Json j = parse(r);
  CHECK(j["count"] == 6);
  CHECK(j["walk"]["final_value"] == 0);
  CHECK(j["walk"]["final_branch"][0]["multiset"] == "1 + 21 + 14 + 6");
  fqg_report_free(r);

  fqg_options opt;
  fqg_options_init(&opt);
  opt.sekine_max_k = 2;
  CHECK(fqg_reproduce_paper(&opt, &r) == FQG_ERR_INVALID_ARGUMENT);
}
