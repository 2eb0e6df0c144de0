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

// Dense exact linear algebra over CycNum.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fqg/exact.hpp"

namespace fqg {

using Vec = std::vector<CycNum>;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ExactMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  CycNum& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycNum& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vec row(std::size_t r) const;
  std::vector<Vec> row_list() const;

  bool operator==(const ExactMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycNum> data_;
};

/// Incrementally maintained reduced row-echelon basis.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t cols) : cols_(cols) {}

  /// Reduces v against the basis and keeps the remainder if non-zero.
  /// Returns true when the rank grew.
  bool insert(Vec v);
  /// Remainder of v after reduction; zero iff v is in the span.
  Vec reduce(Vec v) const;

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t cols_;
  std::vector<Vec> rows_;  // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

/// Non-zero rows of the reduced row-echelon form.
ExactMatrix rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);

/// A linear subspace of an ambient coordinate space, identified by its
/// canonical RREF basis: equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  ExactMatrix basis_matrix() const { return ExactMatrix::from_rows(basis_, ambient_); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  friend Subspace span(std::size_t, const std::vector<Vec>&);
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Throws kDimension if some vector has the wrong length.
Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
bool member(const Subspace& s, const Vec& v);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

struct LinearSolution {
  Vec particular;
  Subspace nullspace;
};

/// Solves a x = b; std::nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const ExactMatrix& a, const Vec& b);

/// Kernel of a as a subspace of the column space dimension.
Subspace nullspace(const ExactMatrix& a);

Vec zero_vec(std::size_t n);
bool is_zero(const Vec& v);
/// y += c * x
void axpy(Vec& y, const CycNum& c, const Vec& x);

}  // namespace fqg
