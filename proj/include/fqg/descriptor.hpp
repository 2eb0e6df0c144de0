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

// JSON algebra descriptors:
//   {"blocks": [...], "delta": {"<i>": [[j, k, "<scalar>"], ...]},
//    "counit": {"<i>": "<scalar>"}, "antipode": {"<i>": [[j, "<scalar>"], ...]},
//    "haar": {"<i>": "<scalar>"} | null}
// plus optional "name" and "names". Zero entries may be omitted.

#pragma once

#include <string>

#include <json.hpp>

#include "fqg/hopf.hpp"

namespace fqg {

using Json = nlohmann::ordered_json;

Json hopf_to_json(const HopfData& h);
/// Structural parse only (kParse / kDimension on malformed input); the axioms
/// are not checked here.
HopfData hopf_from_json(const Json& j);

struct LoadedDescriptor {
  HopfData hopf;
  AxiomReport axioms;
};

/// Parses and runs verify_hopf.
LoadedDescriptor load_descriptor(const Json& j);
/// Reads a file; kIo when unreadable, kParse when not JSON.
Json read_json_file(const std::string& path);

Json tensor_to_json(const TensorElem& t);
/// {"blocks": [...], "terms": [[i, j, "<scalar>"], ...]}; the signature must
/// match `sig` when given.
TensorElem tensor_from_json(const Json& j, const SigPtr& sig);

Json functional_to_json(const Functional& f);
Json element_to_json(const AlgElement& x);

}  // namespace fqg
