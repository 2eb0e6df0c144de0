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

// fqg: command-line front end over the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fqg/fqg.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Global {
  std::string out;
  bool json = false;
  unsigned tolerance_bits = 40;
  std::uint64_t candidate_bound = 1ULL << 20;
};

struct Target {
  std::string kind;  // kp, sekine, cg, fun, descriptor
  std::string path;
  int k = 3;
  std::string group = "z2";
};

int error_exit(fqg_status s) {
  std::cerr << "fqg: error: " << fqg_status_name(s) << ": " << fqg_last_error() << "\n";
  return kExitError;
}

fqg_options options_from(const Global& g) {
  fqg_options o;
  fqg_options_init(&o);
  o.tolerance_bits = g.tolerance_bits;
  o.candidate_bound = g.candidate_bound;
  return o;
}

fqg_status open_target(const Target& t, fqg_algebra** a) {
  if (t.kind == "kp") return fqg_algebra_kp(a);
  if (t.kind == "sekine") return fqg_algebra_sekine(t.k, a);
  if (t.kind == "cg") return fqg_algebra_group(t.group.c_str(), a);
  if (t.kind == "fun") return fqg_algebra_functions(t.group.c_str(), a);
  if (t.kind == "descriptor") {
    if (t.path.empty()) {
      std::cerr << "fqg: error: descriptor target needs a file path\n";
      return FQG_ERR_INVALID_ARGUMENT;
    }
    return fqg_algebra_load(t.path.c_str(), a);
  }
  // A bare path is read as a descriptor.
  return fqg_algebra_load(t.kind.c_str(), a);
}

// Writes the text to --out or stdout; returns false on I/O failure.
bool write_output(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(g.out);
  f << text << "\n";
  if (!f) {
    std::cerr << "fqg: error: cannot write " << g.out << "\n";
    return false;
  }
  return true;
}

// Emits a report and maps its verdict to the exit code.
int finish(const Global& g, fqg_status s, fqg_report* r, bool prefer_text = false, bool judged = true) {
  if (s != FQG_OK) return error_exit(s);
  const char* text = fqg_report_text(r);
  const std::string body = prefer_text && text && !g.json ? text : fqg_report_json(r, 2);
  const bool passed = fqg_report_passed(r) != 0;
  fqg_report_free(r);
  if (!write_output(g, body)) return kExitError;
  if (!judged) return kExitPass;
  return passed ? kExitPass : kExitFail;
}

void add_target(CLI::App* cmd, Target& t, bool positional = true) {
  if (positional) {
    cmd->add_option("target", t.kind, "kp, sekine, cg (group algebra), fun (function algebra), descriptor, or a descriptor path")
        ->required();
    cmd->add_option("path", t.path, "descriptor file (with target 'descriptor')");
  }
  cmd->add_option("--k", t.k, "Sekine parameter")->check(CLI::Range(2, 64));
  cmd->add_option("--group", t.group, "group name: z<n>, products like z2xz4, or s3");
}

// Accepts integers and the symbols p and q.
bool parse_forbidden(const std::string& csv, long p, long q, std::vector<long>& out) {
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "p") {
      out.push_back(p);
    } else if (item == "q") {
      out.push_back(q);
    } else {
      try {
        std::size_t used = 0;
        out.push_back(std::stol(item, &used));
        if (used != item.size()) return false;
      } catch (const std::exception&) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for finite quantum groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", fqg_version());
  Global g;
  app.add_option("--out", g.out, "write the report to a file");
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--tolerance-bits", g.tolerance_bits, "tolerance 2^-bits for numeric positivity checks");
  app.add_option("--candidate-bound", g.candidate_bound, "R-matrix enumeration bound");

  Target target;
  auto* build = app.add_subcommand("build", "emit the JSON descriptor of a model");
  add_target(build, target);

  std::string checks = "all", candidates;
  auto* verify = app.add_subcommand("verify", "run checks against a model or descriptor");
  add_target(verify, target);
  verify->add_option("--checks", checks, "hopf,haar,coideals,series-solvable,series-nilpotent,rmatrix or all");
  verify->add_option("--r", candidates, "candidate R-matrix tensors (JSON)");

  auto* coideals = app.add_subcommand("coideals", "idempotent states, coideals, integrals, normality");
  add_target(coideals, target);

  std::string mode = "solvable";
  auto* series = app.add_subcommand("series", "solvable or nilpotent series");
  add_target(series, target);
  series->add_option("--mode", mode, "solvable or nilpotent")->check(CLI::IsMember({"solvable", "nilpotent"}));

  auto* rmatrix = app.add_subcommand("rmatrix", "universal R-matrices");
  rmatrix->require_subcommand(1);
  rmatrix->fallthrough();
  Target solve_target;
  auto* rsolve = rmatrix->add_subcommand("solve", "solve for all R-matrices");
  add_target(rsolve, solve_target);
  std::string algebra, tensor;
  auto* rverify = rmatrix->add_subcommand("verify", "verify candidate R-matrices");
  rverify->add_option("--algebra", algebra, "descriptor file, or kp")->required();
  rverify->add_option("--r", tensor, "tensor JSON")->required();

  long p = 7, q = 3;
  std::string forbidden;
  auto* classdims = app.add_subcommand("classdims", "class dimension multisets of dimension 2pq");
  classdims->add_option("--p", p, "odd prime")->required();
  classdims->add_option("--q", q, "odd prime")->required();
  classdims->add_option("--forbidden", forbidden, "comma list of excluded dimensions; p and q allowed");

  int sekine_max_k = 7;
  bool slow = false;
  auto* reproduce = app.add_subcommand("reproduce-paper", "run the full acceptance suite");
  reproduce->add_option("--sekine-max-k", sekine_max_k, "largest Sekine parameter")->check(CLI::Range(3, 64));
  reproduce->add_flag("--slow", slow, "include the k = 15 nilpotency run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitError;
  }

  fqg_algebra* a = nullptr;
  fqg_report* r = nullptr;
  const fqg_options opt = options_from(g);

  if (*build) {
    if (fqg_status s = open_target(target, &a); s != FQG_OK) return error_exit(s);
    const fqg_status s = fqg_algebra_descriptor(a, &r);
    fqg_algebra_free(a);
    return finish(g, s, r, false, false);
  }
  if (*verify || *coideals || *series) {
    if (fqg_status s = open_target(target, &a); s != FQG_OK) return error_exit(s);
    fqg_status s;
    if (*verify) {
      s = fqg_verify(a, checks.c_str(), candidates.empty() ? nullptr : candidates.c_str(), &opt, &r);
    } else if (*coideals) {
      s = fqg_coideals(a, &r);
    } else {
      s = fqg_series(a, mode.c_str(), &r);
    }
    fqg_algebra_free(a);
    return finish(g, s, r);
  }
  if (*rsolve) {
    if (fqg_status s = open_target(solve_target, &a); s != FQG_OK) return error_exit(s);
    const fqg_status s = fqg_rmatrix_solve(a, &opt, &r);
    fqg_algebra_free(a);
    return finish(g, s, r);
  }
  if (*rverify) {
    const fqg_status open = algebra == "kp" ? fqg_algebra_kp(&a) : fqg_algebra_load(algebra.c_str(), &a);
    if (open != FQG_OK) return error_exit(open);
    const fqg_status s = fqg_rmatrix_verify(a, tensor.c_str(), &r);
    fqg_algebra_free(a);
    return finish(g, s, r);
  }
  if (*classdims) {
    std::vector<long> f;
    if (!parse_forbidden(forbidden, p, q, f)) {
      std::cerr << "fqg: error: invalid --forbidden list '" << forbidden << "'\n";
      return kExitError;
    }
    const fqg_status s = fqg_classdims(p, q, f.data(), f.size(), &r);
    return finish(g, s, r);
  }
  if (*reproduce) {
    fqg_options ro = opt;
    ro.sekine_max_k = sekine_max_k;
    ro.slow = slow ? 1 : 0;
    const fqg_status s = fqg_reproduce_paper(&ro, &r);
    return finish(g, s, r, true);
  }
  return kExitError;
}
