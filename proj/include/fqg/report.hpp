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

// JSON reports shared by the C API, the CLI and the acceptance suite.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fqg/classdims.hpp"
#include "fqg/coideal.hpp"
#include "fqg/descriptor.hpp"
#include "fqg/rmatrix.hpp"
#include "fqg/series.hpp"

namespace fqg {

enum class ModelKind { kKacPaljutkin, kSekine, kFunctionAlgebra, kGroupAlgebra, kDescriptor };

struct Model {
  ModelKind kind = ModelKind::kKacPaljutkin;
  int k = 0;              // Sekine only
  std::string source;     // group name or descriptor path
  HopfData hopf;
  std::optional<AxiomReport> load_axioms;  // descriptors are verified on load

  std::string id() const;
};

Model kp_model();
Model sekine_model(int k);
Model function_algebra_model(const std::string& group);
Model group_algebra_model(const std::string& group);
/// Reads and verifies a descriptor file.
Model descriptor_model(const std::string& path);

struct RunOptions {
  unsigned tolerance_bits = 40;
  std::uint64_t candidate_bound = 1ULL << 20;
};

Json axioms_json(const AxiomReport& r);
Json haar_json(const HaarReport& r);
Json coideal_json(const HopfData& h, const Coideal& c);
Json series_json(const SeriesReport& r);
Json rreport_json(const RReport& r);
Json walk_json(const WalkReport& r);

/// The named coideals of a model with integrals attached and normality
/// decided: L1..L8 for Kac-Paljutkin, C1, L'1..L'k and A for Sekine, and C1
/// and A otherwise.
struct Lattice {
  std::vector<Coideal> links;
  std::size_t bottom = 0;  // index of C1
  std::size_t top = 0;     // index of A
  std::vector<std::string> notes;
};

Lattice coideal_lattice(const Model& m);
/// The chain used for the nilpotency claim of the model.
std::vector<Coideal> nilpotent_chain(const Model& m, const Lattice& lat);

Json coideals_report(const Model& m);
/// mode: "solvable" or "nilpotent".
Json series_report(const Model& m, const std::string& mode);
Json rmatrix_solve_report(const Model& m, const RunOptions& opt);
Json rmatrix_verify_report(const Model& m, const std::vector<RCandidate>& candidates);
Json classdims_report(long p, long q, const std::set<long>& forbidden);

/// hopf, haar, coideals, series-solvable, series-nilpotent, rmatrix; "all"
/// selects every check that applies to the model (series checks need the
/// named coideals of Kac-Paljutkin or Sekine).
std::vector<std::string> parse_checks(const std::string& csv, const Model& m);
Json verify_report(const Model& m, const std::vector<std::string>& checks, const RunOptions& opt,
                   const std::vector<RCandidate>& candidates = {});

/// The eight verified Kac-Paljutkin families: the published list with the last
/// case taken at lambda^2 = -sqrt(-1).
std::vector<KpFamily> kp_reference_families();

/// A tensor object, an array of them, or {"tensors": [...]}. Entries may carry
/// a "label".
std::vector<RCandidate> candidates_from_json(const Json& j, const SigPtr& sig);

/// Field "passed" of a report (false when absent).
bool report_passed(const Json& report);

}  // namespace fqg
