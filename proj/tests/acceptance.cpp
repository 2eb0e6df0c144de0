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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status 0 only when
// every criterion passes. Flags: --slow (adds Sekine k = 15), --json.

#include <cstring>
#include <iostream>

#include "fqg/acceptance.hpp"

int main(int argc, char** argv) {
  fqg::AcceptanceOptions opt;
  bool json = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      opt.slow = true;
    } else if (std::strcmp(argv[i], "--json") == 0) {
      json = true;
    } else {
      std::cerr << "usage: acceptance [--slow] [--json]\n";
      return 2;
    }
  }
  bool all = true;
  const auto results = fqg::run_acceptance(opt, [&](const fqg::CriterionResult& r) {
    all = all && r.passed;
    if (!json) {
      std::cout << "criterion " << r.id << " (" << r.title << "): " << (r.passed ? "PASS" : "FAIL") << " - "
                << r.summary << "\n"
                << std::flush;
    }
  });
  if (json) std::cout << fqg::acceptance_json(results, opt).dump(2) << "\n";
  return all ? 0 : 1;
}
