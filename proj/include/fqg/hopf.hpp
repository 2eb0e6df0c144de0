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

// Multi-matrix *-algebras, tensor elements and Hopf structure tables.
//
// An algebra is the direct sum of matrix blocks M_{n_1} + ... + M_{n_N}. Its
// canonical basis consists of the matrix units, block-major and row-major
// within each block. All Hopf tables are stored on that basis and extended
// linearly.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fqg/exact.hpp"
#include "fqg/linalg.hpp"

namespace fqg {

class AlgSignature {
 public:
  explicit AlgSignature(std::vector<int> blocks, std::vector<std::string> names = {});

  const std::vector<int>& blocks() const { return blocks_; }
  std::size_t dim() const { return dim_; }
  std::size_t block_of(std::size_t i) const { return block_[i]; }
  std::size_t row_of(std::size_t i) const { return row_[i]; }
  std::size_t col_of(std::size_t i) const { return col_[i]; }
  std::size_t offset(std::size_t block) const { return offsets_[block]; }
  std::size_t index(std::size_t block, std::size_t row, std::size_t col) const;
  /// Index of the transposed matrix unit.
  std::size_t star_index(std::size_t i) const;
  /// Matrix unit product b_i b_j as a basis index, if non-zero.
  std::optional<std::size_t> basis_product(std::size_t i, std::size_t j) const;
  /// Global ids of the row / column line a matrix unit starts / ends on;
  /// b_i b_j != 0 iff end_id(i) == start_id(j).
  std::size_t start_id(std::size_t i) const { return line_offsets_[block_[i]] + row_[i]; }
  std::size_t end_id(std::size_t i) const { return line_offsets_[block_[i]] + col_[i]; }
  const std::string& name(std::size_t i) const { return names_[i]; }

  bool same_shape(const AlgSignature& o) const { return blocks_ == o.blocks_; }

 private:
  std::vector<int> blocks_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> line_offsets_;
  std::vector<std::size_t> block_, row_, col_;
  std::vector<std::string> names_;
  std::size_t dim_ = 0;
};

using SigPtr = std::shared_ptr<const AlgSignature>;

void require_same(const SigPtr& a, const SigPtr& b, const char* where);

class AlgElement {
 public:
  AlgElement() = default;
  explicit AlgElement(SigPtr sig);
  AlgElement(SigPtr sig, Vec coords);

  static AlgElement basis(const SigPtr& sig, std::size_t i);
  static AlgElement unit(const SigPtr& sig);

  const SigPtr& signature() const { return sig_; }
  std::size_t dim() const { return coords_.size(); }
  const Vec& coords() const { return coords_; }
  Vec& coords() { return coords_; }
  const CycNum& operator[](std::size_t i) const { return coords_[i]; }
  CycNum& operator[](std::size_t i) { return coords_[i]; }
  bool is_zero() const { return fqg::is_zero(coords_); }

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(const CycNum& c, const AlgElement& x);
  friend AlgElement operator*(const AlgElement& x, const AlgElement& y);
  bool operator==(const AlgElement& o) const;

  AlgElement star() const;
  /// Human-readable sum over basis names.
  std::string to_string() const;

 private:
  SigPtr sig_;
  Vec coords_;
};

inline AlgElement alg_mul(const AlgElement& x, const AlgElement& y) { return x * y; }
inline AlgElement alg_star(const AlgElement& x) { return x.star(); }

/// Sparse element of A (x) A or A (x) A (x) A.
class TensorElem {
 public:
  using Key = std::uint64_t;

  TensorElem() = default;
  TensorElem(SigPtr sig, int arity);

  static TensorElem pure(const AlgElement& x, const AlgElement& y);
  static TensorElem pure(const AlgElement& x, const AlgElement& y, const AlgElement& z);
  static TensorElem unit(const SigPtr& sig, int arity);
  /// Sums unsorted (key, coefficient) pairs; cheaper than repeated add().
  static TensorElem collect(SigPtr sig, int arity, std::vector<std::pair<Key, CycNum>> terms);

  int arity() const { return arity_; }
  const SigPtr& signature() const { return sig_; }
  const std::map<Key, CycNum>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  Key pack(std::size_t i, std::size_t j, std::size_t k = 0) const;
  std::array<std::size_t, 3> unpack(Key key) const;

  void add(std::size_t i, std::size_t j, const CycNum& c);
  void add(std::size_t i, std::size_t j, std::size_t k, const CycNum& c);
  void add_key(Key key, const CycNum& c);
  CycNum get(std::size_t i, std::size_t j) const;
  CycNum get(std::size_t i, std::size_t j, std::size_t k) const;

  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  friend TensorElem operator*(const CycNum& c, const TensorElem& t);
  bool operator==(const TensorElem& o) const;

  std::string to_string(std::size_t max_terms = 12) const;

 private:
  SigPtr sig_;
  int arity_ = 2;
  std::size_t dim_ = 0;
  std::map<Key, CycNum> coeffs_;
};

TensorElem tensor_mul(const TensorElem& s, const TensorElem& t);
TensorElem tensor_star(const TensorElem& t);
TensorElem flip(const TensorElem& t);

/// Linear functional, stored by its values on the canonical basis.
class Functional {
 public:
  Functional() = default;
  explicit Functional(SigPtr sig);
  Functional(SigPtr sig, Vec values);

  const SigPtr& signature() const { return sig_; }
  const Vec& values() const { return values_; }
  Vec& values() { return values_; }
  CycNum operator()(const AlgElement& x) const;
  CycNum at(std::size_t i) const { return values_[i]; }
  bool operator==(const Functional& o) const;
  std::string to_string() const;

 private:
  SigPtr sig_;
  Vec values_;
};

struct HopfData {
  SigPtr sig;
  std::vector<TensorElem> delta;
  Vec counit;
  std::vector<AlgElement> antipode;
  AlgElement unit;
  std::optional<Functional> haar;
  std::string name;
  /// Construction remarks (e.g. which transcription of a table passed).
  std::vector<std::string> notes;

  std::size_t dim() const { return sig->dim(); }
  AlgElement basis(std::size_t i) const { return AlgElement::basis(sig, i); }
};

/// Builds a HopfData shell with the unit filled in and empty tables.
HopfData make_hopf_shell(SigPtr sig, std::string name);

TensorElem delta_of(const HopfData& h, const AlgElement& x);
CycNum counit_of(const HopfData& h, const AlgElement& x);
AlgElement antipode_of(const HopfData& h, const AlgElement& x);

/// (id (x) phi) t and (phi (x) id) t for arity-2 tensors.
AlgElement apply_right(const TensorElem& t, const Functional& phi);
AlgElement apply_left(const Functional& phi, const TensorElem& t);
/// (Delta (x) id) and (id (x) Delta) on arity-2 tensors.
TensorElem delta_left(const HopfData& h, const TensorElem& t);
TensorElem delta_right(const HopfData& h, const TensorElem& t);

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  bool informational = false;
  std::optional<std::string> witness;  // offending basis element(s)
  std::optional<std::string> difference;
};

struct AxiomReport {
  std::vector<AxiomResult> results;

  bool all_passed() const;
  const AxiomResult* find(const std::string& axiom) const;
  std::optional<std::string> first_failure() const;
};

struct VerifyOptions {
  /// Return as soon as one exact axiom fails (later axioms are omitted).
  bool stop_at_first_failure = false;
};

AxiomReport verify_hopf(const HopfData& h, const VerifyOptions& options = {});

/// (phi * psi)(x) = (phi (x) psi) Delta(x).
Functional convolve(const HopfData& h, const Functional& phi, const Functional& psi);
Functional counit_functional(const HopfData& h);

struct PositivityCheck {
  bool passed = false;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
};

/// Numerical positivity: eigenvalues of G_uv = phi(u^* v) are >= -tolerance.
PositivityCheck check_positivity(const HopfData& h, const Functional& phi, unsigned tolerance_bits);

struct HaarReport {
  bool normalized = false;
  bool left_invariant = false;
  bool right_invariant = false;
  bool hermitian = false;
  PositivityCheck positivity;  // numeric
  std::optional<std::string> witness;

  bool invariance_passed() const { return normalized && left_invariant && right_invariant; }
};

HaarReport verify_haar(const HopfData& h, const Functional& candidate, unsigned tolerance_bits = 40);

/// The unique normalized left-invariant functional; throws kStructure when the
/// invariance system has no or several solutions.
Functional solve_haar(const HopfData& h);

/// Number of worker threads permitted by FQG_THREADS (default: hardware).
unsigned worker_threads();

}  // namespace fqg
