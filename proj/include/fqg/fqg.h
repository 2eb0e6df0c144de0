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

/* C interface to the fqg library. Every function returns an fqg_status; on
 * failure fqg_last_error() describes the problem for the calling thread.
 * Objects are opaque and released with their matching *_free function. */

#ifndef FQG_FQG_H_
#define FQG_FQG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FQG_API __declspec(dllexport)
#else
#define FQG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fqg_status {
  FQG_OK = 0,
  FQG_ERR_INVALID_ARGUMENT = 1,
  FQG_ERR_PARSE = 2,
  FQG_ERR_IO = 3,
  FQG_ERR_DIMENSION = 4,
  FQG_ERR_DIVISION_BY_ZERO = 5,
  FQG_ERR_STRUCTURE = 6,
  FQG_ERR_PRECONDITION = 7,
  FQG_ERR_UNSUPPORTED = 8,
  FQG_ERR_RESOURCE = 9,
  FQG_ERR_INTERNAL = 99
} fqg_status;

typedef struct fqg_algebra fqg_algebra;
typedef struct fqg_report fqg_report;

typedef struct fqg_options {
  unsigned tolerance_bits;  /* numeric positivity checks only */
  uint64_t candidate_bound; /* R-matrix enumeration bound */
  int sekine_max_k;         /* reproduce-paper */
  int slow;                 /* reproduce-paper: include k = 15 */
} fqg_options;

FQG_API const char* fqg_version(void);
FQG_API const char* fqg_status_name(fqg_status status);
/* Message of the last failed call on this thread ("" if none). */
FQG_API const char* fqg_last_error(void);
FQG_API void fqg_options_init(fqg_options* options);

/* Models. */
FQG_API fqg_status fqg_algebra_kp(fqg_algebra** out);
FQG_API fqg_status fqg_algebra_sekine(int k, fqg_algebra** out);
/* C(G) and C[G]; group names like "z4", "z2xz2", "s3" (C(G) only). */
FQG_API fqg_status fqg_algebra_functions(const char* group, fqg_algebra** out);
FQG_API fqg_status fqg_algebra_group(const char* group, fqg_algebra** out);
/* Loads a JSON descriptor and checks the Hopf axioms (results go to verify). */
FQG_API fqg_status fqg_algebra_load(const char* path, fqg_algebra** out);
FQG_API void fqg_algebra_free(fqg_algebra* algebra);
FQG_API fqg_status fqg_algebra_dim(const fqg_algebra* algebra, size_t* out);
FQG_API fqg_status fqg_algebra_descriptor(const fqg_algebra* algebra, fqg_report** out);

/* Reports. checks is a comma list of hopf, haar, coideals, series-solvable,
 * series-nilpotent, rmatrix, or "all". candidates_path may be NULL. */
FQG_API fqg_status fqg_verify(const fqg_algebra* algebra, const char* checks, const char* candidates_path,
                              const fqg_options* options, fqg_report** out);
FQG_API fqg_status fqg_coideals(const fqg_algebra* algebra, fqg_report** out);
/* mode: "solvable" or "nilpotent". */
FQG_API fqg_status fqg_series(const fqg_algebra* algebra, const char* mode, fqg_report** out);
FQG_API fqg_status fqg_rmatrix_solve(const fqg_algebra* algebra, const fqg_options* options, fqg_report** out);
FQG_API fqg_status fqg_rmatrix_verify(const fqg_algebra* algebra, const char* tensor_path, fqg_report** out);
FQG_API fqg_status fqg_classdims(long p, long q, const long* forbidden, size_t forbidden_count, fqg_report** out);
FQG_API fqg_status fqg_reproduce_paper(const fqg_options* options, fqg_report** out);

/* The JSON text (indent < 0 for compact output) and verdict of a report. The
 * string stays valid until the next call on the same report or its release. */
FQG_API const char* fqg_report_json(fqg_report* report, int indent);
FQG_API int fqg_report_passed(const fqg_report* report);
/* Human-readable table, or NULL when the report has none. */
FQG_API const char* fqg_report_text(const fqg_report* report);
FQG_API void fqg_report_free(fqg_report* report);

#ifdef __cplusplus
}
#endif

#endif /* FQG_FQG_H_ */
