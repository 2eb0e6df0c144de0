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

#include "fqg/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "fqg/error.hpp"
#include "fqg/models.hpp"

namespace fqg {

namespace {

Json opt_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> chain_labels(const std::vector<Coideal>& links, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(links[i].label);
  return out;
}

}  // namespace

std::string Model::id() const {
  switch (kind) {
    case ModelKind::kKacPaljutkin:
      return "kac-paljutkin";
    case ModelKind::kSekine:
      return "sekine(k=" + std::to_string(k) + ")";
    case ModelKind::kFunctionAlgebra:
      return "C(" + source + ")";
    case ModelKind::kGroupAlgebra:
      return "C[" + source + "]";
    case ModelKind::kDescriptor:
      return "descriptor:" + source;
  }
  return "?";
}

Model kp_model() {
  Model m;
  m.kind = ModelKind::kKacPaljutkin;
  m.hopf = kac_paljutkin();
  return m;
}

Model sekine_model(int k) {
  Model m;
  m.kind = ModelKind::kSekine;
  m.k = k;
  m.hopf = sekine(k);
  return m;
}

Model function_algebra_model(const std::string& group) {
  Model m;
  m.kind = ModelKind::kFunctionAlgebra;
  m.source = group;
  m.hopf = function_algebra(FiniteGroupTable::from_name(group));
  return m;
}

Model group_algebra_model(const std::string& group) {
  Model m;
  m.kind = ModelKind::kGroupAlgebra;
  m.source = group;
  m.hopf = group_algebra(FiniteGroupTable::from_name(group));
  return m;
}

Model descriptor_model(const std::string& path) {
  LoadedDescriptor d = load_descriptor(read_json_file(path));
  Model m;
  m.kind = ModelKind::kDescriptor;
  m.source = path;
  m.hopf = std::move(d.hopf);
  m.load_axioms = std::move(d.axioms);
  return m;
}

Json axioms_json(const AxiomReport& r) {
  Json j;
  j["passed"] = r.all_passed();
  Json list = Json::array();
  for (const auto& a : r.results) {
    Json e;
    e["axiom"] = a.axiom;
    e["passed"] = a.passed;
    if (a.informational) e["informational"] = true;
    if (a.witness) e["witness"] = *a.witness;
    if (a.difference) e["difference"] = *a.difference;
    list.push_back(e);
  }
  j["results"] = list;
  return j;
}

Json haar_json(const HaarReport& r) {
  Json j;
  j["normalized"] = r.normalized;
  j["left_invariant"] = r.left_invariant;
  j["right_invariant"] = r.right_invariant;
  j["hermitian"] = r.hermitian;
  j["positivity"] = {{"passed", r.positivity.passed},
                     {"min_eigenvalue", r.positivity.min_eigenvalue},
                     {"tolerance", r.positivity.tolerance}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

Json coideal_json(const HopfData& h, const Coideal& c) {
  Json j;
  j["label"] = c.label;
  j["dim"] = c.dim();
  Json basis = Json::array();
  for (const auto& x : basis_elements(h, c.subspace)) basis.push_back(element_to_json(x));
  j["basis"] = basis;
  j["state"] = c.source_state ? functional_to_json(*c.source_state) : Json(nullptr);
  j["integral"] = c.integral ? element_to_json(*c.integral) : Json(nullptr);
  j["integral_is_projection"] = c.integral_is_projection;
  j["unital"] = opt_bool(c.is_unital.get());
  j["subalgebra"] = opt_bool(c.is_subalgebra.get());
  j["star_closed"] = opt_bool(c.is_star_closed.get());
  j["coideal"] = opt_bool(c.is_coideal.get());
  j["normal"] = opt_bool(c.is_normal.get());
  return j;
}

Json series_json(const SeriesReport& r) {
  Json j;
  j["mode"] = r.mode;
  j["chain"] = r.chain;
  j["passed"] = r.verdict;
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json e;
    e["small"] = s.small;
    e["big"] = s.big;
    if (s.integral_central) e["integral_central"] = *s.integral_central;
    if (s.adjoint_triviality) e["adjoint_triviality"] = *s.adjoint_triviality;
    if (s.normal) e["normal"] = *s.normal;
    if (s.corner_closed) e["corner_closed"] = *s.corner_closed;
    if (s.corner_central) e["corner_central"] = *s.corner_central;
    e["passed"] = s.passed();
    if (s.witness) e["witness"] = *s.witness;
    steps.push_back(e);
  }
  j["steps"] = steps;
  return j;
}

Json rreport_json(const RReport& r) {
  Json j;
  j["quasitriangular"] = r.quasitriangular();
  j["invertible"] = r.invertible;
  j["intertwines"] = r.intertwines;
  j["hexagon1"] = r.hexagon1;
  j["hexagon2"] = r.hexagon2;
  j["counit_normalized"] = r.counit_normalized;
  j["unitary"] = r.unitary;
  j["yang_baxter"] = r.yang_baxter;
  j["minimal"] = r.minimal;
  j["minimal_dim"] = r.minimal_dim;
  j["minimal_is_hopf"] = r.minimal_is_hopf;
  Json w = Json::object();
  for (const auto& [k, v] : r.witnesses) w[k] = v;
  j["witnesses"] = w;
  return j;
}

Json walk_json(const WalkReport& r) {
  Json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["k"] = r.k;
  j["final_value"] = r.final_value;
  j["forbidden"] = r.forbidden;
  j["multisets"] = r.multisets;
  Json t = Json::object();
  for (const auto& [k, v] : r.tallies) t[k] = v;
  j["tallies"] = t;
  j["with_small_class"] = r.with_small_class;
  Json fb = Json::array();
  for (const auto& e : r.final_branch) {
    fb.push_back({{"multiset", e.multiset.to_string()}, {"chosen", e.chosen}, {"has_small_class", e.has_small_class}});
  }
  j["final_branch"] = fb;
  j["remaining_sum"] = r.remaining_sum;
  j["remaining_divides"] = r.remaining_divides;
  j["reconstructed_steps"] = r.reconstructed_steps;
  return j;
}

Lattice coideal_lattice(const Model& m) {
  const HopfData& h = m.hopf;
  Lattice lat;
  if (m.kind == ModelKind::kKacPaljutkin) {
    const KpNamed n = kp_named_objects(h);
    for (int i = 0; i < 8; ++i) {
      Coideal c = coideal_from_state(h, n.rho[i], "L" + std::to_string(i + 1));
      if (!(c.subspace == n.listed_L[i])) {
        lat.notes.push_back(c.label + ": the printed span differs from the coideal of its state; the computed one is used");
      }
      lat.links.push_back(std::move(c));
    }
    lat.bottom = 7;
    lat.top = 0;
  } else if (m.kind == ModelKind::kSekine) {
    const SekineNamed n = sekine_named_objects(h, m.k);
    lat.links.push_back(trivial_coideal(h));
    for (int i = 0; i < m.k; ++i) {
      Coideal c = coideal_from_state(h, n.h[i], "L'" + std::to_string(i + 1));
      if (!(c.subspace == n.listed_L[i])) lat.notes.push_back(c.label + ": differs from the listed span");
      lat.links.push_back(std::move(c));
    }
    lat.links.push_back(full_coideal(h));
    lat.bottom = 0;
    lat.top = lat.links.size() - 1;
  } else {
    lat.links = {trivial_coideal(h), full_coideal(h)};
    lat.bottom = 0;
    lat.top = 1;
  }
  for (auto& c : lat.links) {
    if (!c.is_subalgebra.known()) c.is_subalgebra.set(is_multiplicatively_closed(h, c.subspace));
    attach_integral(h, c);
    is_normal_coideal(h, c);
  }
  return lat;
}

std::vector<Coideal> nilpotent_chain(const Model& m, const Lattice& lat) {
  if (m.kind == ModelKind::kKacPaljutkin) return select_chain(lat.links, {7, 4, 3, 0});
  if (m.kind == ModelKind::kSekine) {
    return select_chain(lat.links, {0, static_cast<std::size_t>(m.k), 1, lat.top});
  }
  return select_chain(lat.links, {lat.bottom, lat.top});
}

Json coideals_report(const Model& m) {
  const HopfData& h = m.hopf;
  const Lattice lat = coideal_lattice(m);
  Json j;
  j["command"] = "coideals";
  j["model"] = m.id();
  bool ok = true;
  Json list = Json::array();
  std::vector<std::optional<AlgElement>> named_p(lat.links.size());
  std::vector<std::optional<Subspace>> listed(lat.links.size());
  if (m.kind == ModelKind::kKacPaljutkin) {
    const KpNamed n = kp_named_objects(h);
    for (int i = 0; i < 8; ++i) {
      named_p[i] = n.p[i];
      listed[i] = n.listed_L[i];
    }
  } else if (m.kind == ModelKind::kSekine) {
    const SekineNamed n = sekine_named_objects(h, m.k);
    for (int i = 0; i < m.k; ++i) {
      named_p[i + 1] = n.p[i];
      listed[i + 1] = n.listed_L[i];
    }
  }
  for (std::size_t i = 0; i < lat.links.size(); ++i) {
    const Coideal& c = lat.links[i];
    Json e = coideal_json(h, c);
    const bool flags = c.is_unital.value() && c.is_subalgebra.value() && c.is_star_closed.value() && c.is_coideal.value();
    e["passed"] = flags;
    ok = ok && flags;
    if (c.source_state) {
      const bool idem = is_idempotent_state(h, *c.source_state);
      e["state_idempotent"] = idem;
      ok = ok && idem;
    }
    if (listed[i]) e["listed_span_matches"] = c.subspace == *listed[i];
    if (named_p[i]) {
      const bool integral_ok = c.integral && *c.integral == *named_p[i];
      const bool triangle = c.source_state && state_from_projection(h, *named_p[i]) == *c.source_state;
      e["integral_matches_projection"] = integral_ok;
      e["projection_state_matches"] = triangle;
      ok = ok && integral_ok && triangle;
    }
    if (!c.is_normal.value()) {
      Coideal copy = c;
      copy.is_normal = Flag();
      std::optional<NormalityWitness> w;
      is_normal_coideal(h, copy, &w);
      if (w) {
        e["normality_witness"] = {{"a", h.sig->name(w->a)},
                                  {"x", element_to_json(basis_elements(h, c.subspace)[w->x])}};
      }
    }
    list.push_back(e);
  }
  j["coideals"] = list;
  // phi <= psi for the states of the named coideals.
  Json order = Json::array();
  for (const auto& a : lat.links) {
    for (const auto& b : lat.links) {
      if (&a != &b && a.source_state && b.source_state && state_leq(h, *a.source_state, *b.source_state)) {
        order.push_back({a.label, b.label});
      }
    }
  }
  j["state_order"] = order;
  j["notes"] = lat.notes;
  j["passed"] = ok;
  return j;
}

namespace {

Json solvable_json(const Model& m, const Lattice& lat, std::size_t* passing) {
  Json j;
  if (m.kind == ModelKind::kKacPaljutkin) {
    const Classification cl = classify_solvable_series(m.hopf, lat.links, lat.bottom, lat.top);
    j["max_length"] = cl.max_length;
    j["candidates"] = cl.candidates;
    Json chains = Json::array();
    for (const auto& c : cl.chains) chains.push_back(join(chain_labels(lat.links, c), " < "));
    j["passing_chains"] = chains;
    Json reports = Json::array();
    for (const auto& r : cl.reports) reports.push_back(series_json(r));
    j["reports"] = reports;
    *passing = cl.chains.size();
  } else {
    const SeriesReport r = check_solvable_series(m.hopf, nilpotent_chain(m, lat));
    j["reports"] = Json::array({series_json(r)});
    *passing = r.verdict ? 1 : 0;
  }
  return j;
}

}  // namespace

Json series_report(const Model& m, const std::string& mode) {
  if (mode != "solvable" && mode != "nilpotent") fail(ErrorCode::kInvalidArgument, "series mode must be solvable or nilpotent");
  const Lattice lat = coideal_lattice(m);
  Json j;
  j["command"] = "series";
  j["model"] = m.id();
  j["mode"] = mode;
  if (mode == "solvable") {
    std::size_t passing = 0;
    j.update(solvable_json(m, lat, &passing));
    j["passing"] = passing;
    j["passed"] = passing > 0;
  } else {
    const SeriesReport r = check_nilpotent_series(m.hopf, nilpotent_chain(m, lat));
    j["report"] = series_json(r);
    j["passed"] = r.verdict;
  }
  return j;
}

std::vector<KpFamily> kp_reference_families() {
  const CycNum i = CycNum::root_of_unity(4, 1);
  std::vector<KpFamily> out;
  for (const auto& f : kp_published_families(i)) {
    if (f.case_index != 4) out.push_back(f);
  }
  for (const auto& f : kp_published_families(-i)) {
    if (f.case_index == 4) out.push_back(f);
  }
  return out;
}

std::vector<RCandidate> candidates_from_json(const Json& j, const SigPtr& sig) {
  const Json* list = &j;
  Json wrapped;
  if (j.is_object() && j.contains("tensors")) {
    list = &j["tensors"];
  } else if (j.is_object()) {
    wrapped = Json::array({j});
    list = &wrapped;
  }
  if (!list->is_array()) fail(ErrorCode::kParse, "expected a tensor, an array of tensors or {\"tensors\": [...]}");
  std::vector<RCandidate> out;
  for (const auto& e : *list) {
    const Json& t = e.contains("tensor") ? e["tensor"] : e;
    RCandidate c{tensor_from_json(t, sig), RProvenance::kUserSupplied, "R" + std::to_string(out.size() + 1)};
    if (e.contains("label") && e["label"].is_string()) c.label = e["label"].get<std::string>();
    out.push_back(std::move(c));
  }
  return out;
}

Json rmatrix_solve_report(const Model& m, const RunOptions& opt) {
  if (m.kind == ModelKind::kSekine) fail(ErrorCode::kUnsupported, "R-matrix solving is not implemented for Sekine algebras");
  const RSolveOptions so{opt.candidate_bound};
  const RSolveResult res =
      m.kind == ModelKind::kKacPaljutkin ? solve_kp_rmatrices(m.hopf, so) : solve_rmatrices(m.hopf, so);
  Json j;
  j["command"] = "rmatrix solve";
  j["model"] = m.id();
  j["unknowns"] = res.unknowns;
  j["linear_rank"] = res.linear_rank;
  j["free_parameters"] = res.free_parameters;
  j["quadratic_equations"] = res.quadratic_equations;
  j["leaves"] = res.candidates;
  j["count"] = res.solutions.size();
  bool ok = !res.solutions.empty();
  Json sols = Json::array();
  for (const auto& s : res.solutions) {
    const RReport r = verify_rmatrix(m.hopf, s);
    ok = ok && r.quasitriangular() && r.counit_normalized;
    sols.push_back({{"label", s.label},
                    {"provenance", provenance_name(s.provenance)},
                    {"tensor", tensor_to_json(s.tensor)},
                    {"verification", rreport_json(r)}});
  }
  j["solutions"] = sols;
  if (m.kind == ModelKind::kKacPaljutkin) {
    std::set<std::string> solved, expected;
    for (const auto& s : res.solutions) solved.insert(tensor_to_json(s.tensor).dump());
    for (const auto& f : kp_reference_families()) expected.insert(tensor_to_json(kp_r_from_params(m.hopf, f.params)).dump());
    const bool match = solved == expected;
    j["matches_published_families"] = match;
    // The last case exactly as printed.
    Json printed = Json::array();
    for (const auto& f : kp_published_families()) {
      if (f.case_index != 4) continue;
      const RReport r = verify_rmatrix(m.hopf, {kp_r_from_params(m.hopf, f.params), RProvenance::kPublishedFamily, f.label});
      printed.push_back({{"label", f.label}, {"quasitriangular", r.quasitriangular()}});
    }
    j["printed_case4"] = printed;
    ok = ok && match;
  }
  j["passed"] = ok;
  return j;
}

Json rmatrix_verify_report(const Model& m, const std::vector<RCandidate>& candidates) {
  Json j;
  j["command"] = "rmatrix verify";
  j["model"] = m.id();
  bool ok = !candidates.empty();
  Json list = Json::array();
  for (const auto& c : candidates) {
    const RReport r = verify_rmatrix(m.hopf, c);
    const bool pass = r.quasitriangular() && r.counit_normalized;
    ok = ok && pass;
    list.push_back({{"label", c.label}, {"passed", pass}, {"verification", rreport_json(r)}});
  }
  j["candidates"] = list;
  j["passed"] = ok;
  return j;
}

Json classdims_report(long p, long q, const std::set<long>& forbidden) {
  const auto ms = enumerate_multisets(p, q, forbidden);
  const WalkReport w = proof_walk(p, q, forbidden);
  Json j;
  j["command"] = "classdims";
  j["p"] = p;
  j["q"] = q;
  j["forbidden"] = forbidden;
  j["count"] = ms.size();
  Json list = Json::array();
  for (const auto& m : ms) list.push_back(m.to_string());
  j["multisets"] = list;
  j["walk"] = walk_json(w);
  // Exploratory: the enumeration is reported, no claim is judged.
  j["passed"] = true;
  return j;
}

namespace {

const std::vector<std::string> kAllChecks{"hopf", "haar", "coideals", "series-solvable", "series-nilpotent", "rmatrix"};

}  // namespace

std::vector<std::string> parse_checks(const std::string& csv, const Model& m) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      for (const auto& c : kAllChecks) {
        if (c == "rmatrix" && m.kind != ModelKind::kKacPaljutkin) continue;
        // Without named coideals the only chain is C1 < A, which is not a claim.
        const bool named = m.kind == ModelKind::kKacPaljutkin || m.kind == ModelKind::kSekine;
        if (c.rfind("series", 0) == 0 && !named) continue;
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
      }
      continue;
    }
    if (std::find(kAllChecks.begin(), kAllChecks.end(), item) == kAllChecks.end()) {
      fail(ErrorCode::kInvalidArgument, "unknown check '" + item + "'");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) fail(ErrorCode::kInvalidArgument, "no checks selected");
  return out;
}

Json verify_report(const Model& m, const std::vector<std::string>& checks, const RunOptions& opt,
                   const std::vector<RCandidate>& candidates) {
  const HopfData& h = m.hopf;
  const bool kp = m.kind == ModelKind::kKacPaljutkin;
  if (std::find(checks.begin(), checks.end(), "rmatrix") != checks.end() && !kp && candidates.empty()) {
    fail(ErrorCode::kPrecondition, "the rmatrix check needs the kac-paljutkin model or candidate tensors");
  }
  Json j;
  j["command"] = "verify";
  j["model"] = m.id();
  j["checks_requested"] = checks;
  Json results = Json::array();
  Json timing = Json::object();
  bool all = true;

  // Downstream checks assume a valid Hopf algebra.
  const AxiomReport axioms = m.load_axioms ? *m.load_axioms : verify_hopf(h);
  const bool hopf_ok = axioms.all_passed();
  std::optional<Lattice> lattice;

  for (const auto& name : checks) {
    const auto t0 = std::chrono::steady_clock::now();
    Json e;
    e["check"] = name;
    bool pass = false;
    if (name == "hopf") {
      e["claim"] = "Hopf *-algebra axioms";
      e["detail"] = axioms_json(axioms);
      pass = hopf_ok;
    } else if (!hopf_ok) {
      e["claim"] = nullptr;
      e["skipped"] = "the Hopf axioms failed";
    } else if (name == "haar") {
      e["claim"] = "Haar state";
      const Functional solved = solve_haar(h);
      const HaarReport r = verify_haar(h, solved, opt.tolerance_bits);
      Json d = haar_json(r);
      d["state"] = functional_to_json(solved);
      pass = r.invariance_passed() && r.hermitian && r.positivity.passed;
      if (h.haar) {
        d["matches_published"] = *h.haar == solved;
        pass = pass && *h.haar == solved;
      }
      e["detail"] = d;
    } else if (name == "coideals") {
      e["claim"] = kp ? "eight idempotent states and their coideals" : "idempotent states and coideals";
      const Json d = coideals_report(m);
      pass = report_passed(d);
      e["detail"] = d;
    } else if (name == "series-solvable") {
      if (!lattice) lattice = coideal_lattice(m);
      std::size_t passing = 0;
      Json d = solvable_json(m, *lattice, &passing);
      d["passing"] = passing;
      if (kp) {
        e["claim"] = "five solvable series";
        pass = passing == 5 && d["max_length"] == 4;
      } else {
        e["claim"] = "solvable series";
        pass = passing == 1;
      }
      e["detail"] = d;
    } else if (name == "series-nilpotent") {
      if (!lattice) lattice = coideal_lattice(m);
      e["claim"] = "nilpotent";
      const SeriesReport r = check_nilpotent_series(h, nilpotent_chain(m, *lattice));
      e["detail"] = series_json(r);
      pass = r.verdict;
    } else if (name == "rmatrix") {
      if (!candidates.empty()) {
        e["claim"] = "supplied R-matrices";
        const Json d = rmatrix_verify_report(m, candidates);
        pass = report_passed(d);
        e["detail"] = d;
      } else {
        e["claim"] = "eight R-matrices";
        const Json d = rmatrix_solve_report(m, opt);
        pass = report_passed(d) && d["count"] == 8;
        e["detail"] = d;
      }
    }
    e["passed"] = pass;
    all = all && pass;
    timing[name] = seconds_since(t0);
    results.push_back(e);
  }
  j["results"] = results;
  j["notes"] = h.notes;
  j["passed"] = all;
  j["timing"] = timing;
  return j;
}

bool report_passed(const Json& report) {
  return report.is_object() && report.contains("passed") && report["passed"].is_boolean() && report["passed"].get<bool>();
}

}  // namespace fqg
