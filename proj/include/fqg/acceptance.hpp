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

// The acceptance suite: one exact check per criterion, shared by the
// acceptance test binary and `fqg reproduce-paper`.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fqg/descriptor.hpp"

namespace fqg {

struct AcceptanceOptions {
  int sekine_max_k = 7;
  bool slow = false;  // adds the k = 15 nilpotency run
  unsigned tolerance_bits = 40;
  std::uint64_t candidate_bound = 1ULL << 20;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string claim;
  bool passed = false;
  std::string summary;
  Json detail;
  double seconds = 0.0;
};

constexpr int kCriteriaCount = 10;

/// Runs criterion `id` (1..10). Library errors are caught and reported as a
/// failure with the error message.
CriterionResult run_criterion(int id, const AcceptanceOptions& opt);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& progress = {});

/// Machine report: criteria in order, timings in a separate object.
Json acceptance_json(const std::vector<CriterionResult>& results, const AcceptanceOptions& opt);
/// One line per criterion.
std::string acceptance_table(const std::vector<CriterionResult>& results);

}  // namespace fqg
