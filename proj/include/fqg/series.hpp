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

// Solvable and nilpotent series of coideal subalgebras.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fqg/coideal.hpp"

namespace fqg {

/// {x in s : x y = y x for every y in s}; kPrecondition unless s is closed
/// under multiplication.
Subspace relative_center(const HopfData& h, const Subspace& s);

struct SeriesStep {
  std::string small;
  std::string big;
  // Solvable conditions.
  std::optional<bool> integral_central;
  std::optional<bool> adjoint_triviality;
  // Nilpotent conditions.
  std::optional<bool> normal;  // both links normal
  std::optional<bool> corner_closed;
  std::optional<bool> corner_central;
  std::optional<std::string> witness;

  bool passed() const;
};

struct SeriesReport {
  std::string mode;  // "solvable" or "nilpotent"
  std::vector<std::string> chain;
  std::vector<SeriesStep> steps;
  bool verdict = false;
};

/// Both solvable conditions for L_j = small, L_{j+1} = big. small needs an
/// integral (kPrecondition otherwise) and must sit strictly inside big.
SeriesStep check_solvable_step(const HopfData& h, const Coideal& small, const Coideal& big);

/// The chain must start at C1, end at A and increase strictly; kInvalidArgument
/// otherwise. Missing integrals are computed on a local copy.
SeriesReport check_solvable_series(const HopfData& h, const std::vector<Coideal>& chain);
/// Links are tested for normality (flags are filled in on a local copy).
SeriesReport check_nilpotent_series(const HopfData& h, const std::vector<Coideal>& chain);

/// All strictly increasing chains links[bottom] < ... < links[top], as index
/// lists, ordered by length and then lexicographically.
std::vector<std::vector<std::size_t>> enumerate_chains(const std::vector<Coideal>& links, std::size_t bottom,
                                                       std::size_t top);

std::vector<Coideal> select_chain(const std::vector<Coideal>& links, const std::vector<std::size_t>& idx);

struct Classification {
  std::size_t max_length = 0;
  std::size_t candidates = 0;
  std::vector<std::vector<std::size_t>> chains;  // passing maximal-length chains
  std::vector<SeriesReport> reports;             // one per candidate, same order
};

/// Runs the solvable checker on every maximal-length chain. Integrals are
/// attached where missing.
Classification classify_solvable_series(const HopfData& h, std::vector<Coideal> links, std::size_t bottom,
                                         std::size_t top);

}  // namespace fqg
