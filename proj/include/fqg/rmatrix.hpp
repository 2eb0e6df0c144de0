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

// Universal R-matrices: verification, the Kac-Paljutkin solver, and the
// minimal sub-Hopf algebra generated by the slices of R.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fqg/hopf.hpp"
#include "fqg/linalg.hpp"

namespace fqg {

enum class RProvenance { kAnsatzSolved, kUserSupplied, kPublishedFamily };

const char* provenance_name(RProvenance p);

struct RCandidate {
  TensorElem tensor;
  RProvenance provenance = RProvenance::kUserSupplied;
  std::string label;
};

/// "12", "13" or "23": places the two legs of t and puts 1 on the remaining
/// one. kInvalidArgument for other codes.
TensorElem leg_embed(const TensorElem& t, const std::string& legs);

/// Exact two-sided inverse in A (x) A, computed block by block; std::nullopt
/// when t is singular.
std::optional<TensorElem> tensor_inverse(const TensorElem& t);

struct MinimalSubalgebra {
  Subspace subspace;
  bool delta_closed = false;
  bool antipode_closed = false;
  bool star_closed = false;
};

/// Multiplicative closure of the left and right slices of r together with 1.
MinimalSubalgebra minimal_subalgebra(const HopfData& h, const TensorElem& r);

/// R12 R13 R23 == R23 R13 R12.
bool yang_baxter(const TensorElem& r);

struct RReport {
  bool invertible = false;
  std::optional<TensorElem> inverse;
  bool intertwines = false;
  bool hexagon1 = false;
  bool hexagon2 = false;
  bool counit_normalized = false;
  bool unitary = false;
  bool yang_baxter = false;
  bool minimal = false;
  std::size_t minimal_dim = 0;
  bool minimal_is_hopf = false;  // A_R stable under Delta and S
  std::map<std::string, std::string> witnesses;

  bool quasitriangular() const { return invertible && intertwines && hexagon1 && hexagon2; }
};

RReport verify_rmatrix(const HopfData& h, const RCandidate& r);

/// Coefficients of the reduced Kac-Paljutkin form. a is indexed [i][j] for
/// e_i (x) e_j; b[i] multiplies e_i (x) a11, c[i] multiplies a11 (x) e_i;
/// d = (D1111, D1122, D1212, D1221).
struct KpRParams {
  std::array<std::array<CycNum, 4>, 4> a;
  std::array<CycNum, 4> b;
  std::array<CycNum, 4> c;
  std::array<CycNum, 4> d;
};

/// R built from the parameters in the printed reduced form.
TensorElem kp_r_from_params(const HopfData& kp, const KpRParams& p);
/// Reads the parameters back; std::nullopt if r is not of the reduced form.
std::optional<KpRParams> kp_r_params(const HopfData& kp, const TensorElem& r);

/// The A-matrix shared by all eight families.
std::array<std::array<CycNum, 4>, 4> kp_r_a_matrix();

struct KpFamily {
  int case_index = 0;  // 1..4 in the order of the published list
  std::string label;   // e.g. "case1(+)", "case3(lambda=z8^1)"
  KpRParams params;
};

/// The eight published families. For the last case lambda ranges over the
/// square roots of `case4_lambda_square` (the list prints sqrt(-1); its
/// derivation obtains -sqrt(-1)).
std::vector<KpFamily> kp_published_families(const CycNum& case4_lambda_square = CycNum::root_of_unity(4, 1));

struct RSolveOptions {
  std::uint64_t max_candidates = 1ULL << 20;
};

struct RSolveResult {
  std::vector<RCandidate> solutions;  // survivors of verify_rmatrix, in search order
  std::size_t unknowns = 0;
  std::size_t linear_rank = 0;
  std::size_t free_parameters = 0;
  std::size_t quadratic_equations = 0;
  std::uint64_t candidates = 0;  // leaves reached by the root enumeration
  std::vector<std::string> log;  // branching decisions
};

/// Linear stage (R Delta = Delta^op R and counit normalization), then the
/// hexagon identities solved by elimination and enumeration of square roots
/// in cyclotomic fields. kUnsupported unless h has the Kac-Paljutkin shape;
/// kResource when the enumeration bound is exceeded.
RSolveResult solve_kp_rmatrices(const HopfData& h, const RSolveOptions& options = {});

/// Same staged solver for any Hopf algebra (dim^2 unknowns).
RSolveResult solve_rmatrices(const HopfData& h, const RSolveOptions& options = {});

}  // namespace fqg
