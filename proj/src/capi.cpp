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

#include "fqg/fqg.h"

#include <new>
#include <string>

#include "fqg/acceptance.hpp"
#include "fqg/error.hpp"
#include "fqg/report.hpp"

struct fqg_algebra {
  fqg::Model model;
};

struct fqg_report {
  fqg::Json json;
  std::string text;
  bool has_text = false;
  std::string rendered;
};

namespace {

thread_local std::string g_last_error;

template <class F>
fqg_status guarded(F&& fn) {
  try {
    fn();
    g_last_error.clear();
    return FQG_OK;
  } catch (const fqg::Error& e) {
    g_last_error = e.what();
    return static_cast<fqg_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FQG_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FQG_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) fqg::fail(fqg::ErrorCode::kInvalidArgument, std::string(what) + " is NULL");
}

fqg_status make_algebra(fqg_algebra** out, fqg::Model (*build)(const std::string&), const char* arg) {
  return guarded([&] {
    require(out, "out");
    require(arg, "argument");
    *out = new fqg_algebra{build(arg)};
  });
}

fqg_status emit(fqg_report** out, fqg::Json j) {
  *out = new fqg_report{std::move(j), {}, false, {}};
  return FQG_OK;
}

// Downstream computations assume a valid Hopf algebra.
const fqg::Model& valid_model(const fqg_algebra* algebra) {
  require(algebra, "algebra");
  const fqg::Model& m = algebra->model;
  if (m.load_axioms && !m.load_axioms->all_passed()) {
    fqg::fail(fqg::ErrorCode::kStructure, "the descriptor fails the Hopf axioms: " + *m.load_axioms->first_failure());
  }
  return m;
}

fqg::RunOptions run_options(const fqg_options* o) {
  fqg::RunOptions r;
  if (o) {
    r.tolerance_bits = o->tolerance_bits;
    r.candidate_bound = o->candidate_bound;
  }
  return r;
}

}  // namespace

extern "C" {

const char* fqg_version(void) { return "1.0.0"; }

const char* fqg_status_name(fqg_status status) {
  switch (status) {
    case FQG_OK: return "ok";
    case FQG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FQG_ERR_PARSE: return "parse error";
    case FQG_ERR_IO: return "i/o error";
    case FQG_ERR_DIMENSION: return "dimension mismatch";
    case FQG_ERR_DIVISION_BY_ZERO: return "division by zero";
    case FQG_ERR_STRUCTURE: return "structure error";
    case FQG_ERR_PRECONDITION: return "precondition violated";
    case FQG_ERR_UNSUPPORTED: return "unsupported";
    case FQG_ERR_RESOURCE: return "resource limit";
    case FQG_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* fqg_last_error(void) { return g_last_error.c_str(); }

void fqg_options_init(fqg_options* options) {
  if (!options) return;
  options->tolerance_bits = 40;
  options->candidate_bound = 1ULL << 20;
  options->sekine_max_k = 7;
  options->slow = 0;
}

fqg_status fqg_algebra_kp(fqg_algebra** out) {
  return guarded([&] {
    require(out, "out");
    *out = new fqg_algebra{fqg::kp_model()};
  });
}

fqg_status fqg_algebra_sekine(int k, fqg_algebra** out) {
  return guarded([&] {
    require(out, "out");
    *out = new fqg_algebra{fqg::sekine_model(k)};
  });
}

fqg_status fqg_algebra_functions(const char* group, fqg_algebra** out) {
  return make_algebra(out, fqg::function_algebra_model, group);
}

fqg_status fqg_algebra_group(const char* group, fqg_algebra** out) {
  return make_algebra(out, fqg::group_algebra_model, group);
}

fqg_status fqg_algebra_load(const char* path, fqg_algebra** out) {
  return make_algebra(out, fqg::descriptor_model, path);
}

void fqg_algebra_free(fqg_algebra* algebra) { delete algebra; }

fqg_status fqg_algebra_dim(const fqg_algebra* algebra, size_t* out) {
  return guarded([&] {
    require(algebra, "algebra");
    require(out, "out");
    *out = algebra->model.hopf.dim();
  });
}

fqg_status fqg_algebra_descriptor(const fqg_algebra* algebra, fqg_report** out) {
  return guarded([&] {
    require(algebra, "algebra");
    require(out, "out");
    emit(out, fqg::hopf_to_json(algebra->model.hopf));
  });
}

fqg_status fqg_verify(const fqg_algebra* algebra, const char* checks, const char* candidates_path,
                      const fqg_options* options, fqg_report** out) {
  return guarded([&] {
    require(algebra, "algebra");
    require(out, "out");
    const fqg::Model& m = algebra->model;
    const auto list = fqg::parse_checks(checks ? checks : "all", m);
    std::vector<fqg::RCandidate> candidates;
    if (candidates_path) candidates = fqg::candidates_from_json(fqg::read_json_file(candidates_path), m.hopf.sig);
    emit(out, fqg::verify_report(m, list, run_options(options), candidates));
  });
}

fqg_status fqg_coideals(const fqg_algebra* algebra, fqg_report** out) {
  return guarded([&] {
    require(out, "out");
    emit(out, fqg::coideals_report(valid_model(algebra)));
  });
}

fqg_status fqg_series(const fqg_algebra* algebra, const char* mode, fqg_report** out) {
  return guarded([&] {
    require(mode, "mode");
    require(out, "out");
    emit(out, fqg::series_report(valid_model(algebra), mode));
  });
}

fqg_status fqg_rmatrix_solve(const fqg_algebra* algebra, const fqg_options* options, fqg_report** out) {
  return guarded([&] {
    require(out, "out");
    emit(out, fqg::rmatrix_solve_report(valid_model(algebra), run_options(options)));
  });
}

fqg_status fqg_rmatrix_verify(const fqg_algebra* algebra, const char* tensor_path, fqg_report** out) {
  return guarded([&] {
    require(tensor_path, "tensor_path");
    require(out, "out");
    const fqg::Model& m = valid_model(algebra);
    const auto candidates = fqg::candidates_from_json(fqg::read_json_file(tensor_path), m.hopf.sig);
    emit(out, fqg::rmatrix_verify_report(m, candidates));
  });
}

fqg_status fqg_classdims(long p, long q, const long* forbidden, size_t forbidden_count, fqg_report** out) {
  return guarded([&] {
    require(out, "out");
    if (forbidden_count) require(forbidden, "forbidden");
    const std::set<long> f(forbidden, forbidden + forbidden_count);
    emit(out, fqg::classdims_report(p, q, f));
  });
}

fqg_status fqg_reproduce_paper(const fqg_options* options, fqg_report** out) {
  return guarded([&] {
    require(out, "out");
    fqg::AcceptanceOptions opt;
    if (options) {
      opt.sekine_max_k = options->sekine_max_k;
      opt.slow = options->slow != 0;
      opt.tolerance_bits = options->tolerance_bits;
      opt.candidate_bound = options->candidate_bound;
    }
    if (opt.sekine_max_k < 3) fqg::fail(fqg::ErrorCode::kInvalidArgument, "sekine_max_k must be at least 3");
    const auto results = fqg::run_acceptance(opt);
    emit(out, fqg::acceptance_json(results, opt));
    (*out)->text = fqg::acceptance_table(results);
    (*out)->has_text = true;
  });
}

const char* fqg_report_json(fqg_report* report, int indent) {
  if (!report) return nullptr;
  report->rendered = report->json.dump(indent < 0 ? -1 : indent);
  return report->rendered.c_str();
}

int fqg_report_passed(const fqg_report* report) { return report && fqg::report_passed(report->json) ? 1 : 0; }

const char* fqg_report_text(const fqg_report* report) {
  return report && report->has_text ? report->text.c_str() : nullptr;
}

void fqg_report_free(fqg_report* report) { delete report; }

}  // extern "C"
