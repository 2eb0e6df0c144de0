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

#include "fqg/linalg.hpp"

#include <algorithm>

#include "fqg/error.hpp"

namespace fqg {

Vec zero_vec(std::size_t n) { return Vec(n); }

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const CycNum& x) { return x.is_zero(); });
}

void axpy(Vec& y, const CycNum& c, const Vec& x) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += c * x[i];
  }
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::kDimension, "from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(1L);
  return m;
}

Vec ExactMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Vec> ExactMatrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Vec EchelonBuilder::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const CycNum c = v[pivots_[i]];
    if (!c.is_zero()) axpy(v, -c, rows_[i]);
  }
  return v;
}

bool EchelonBuilder::insert(Vec v) {
  if (v.size() != cols_) fail(ErrorCode::kDimension, "EchelonBuilder: vector length mismatch");
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < cols_ && v[p].is_zero()) ++p;
  if (p == cols_) return false;
  const CycNum inv = v[p].inverse();
  for (auto& x : v) {
    if (!x.is_zero()) x *= inv;
  }
  for (auto& row : rows_) {
    const CycNum c = row[p];
    if (!c.is_zero()) axpy(row, -c, v);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

ExactMatrix rref(const ExactMatrix& m) {
  EchelonBuilder b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.insert(m.row(r));
  return ExactMatrix::from_rows(b.rows(), m.cols());
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rows(); }

Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  EchelonBuilder b(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) {
      fail(ErrorCode::kDimension, "span: vector of length " + std::to_string(v.size()) +
                                      " in ambient dimension " + std::to_string(ambient_dim));
    }
    b.insert(v);
  }
  Subspace s(ambient_dim);
  s.basis_ = b.rows();
  s.pivots_ = b.pivots();
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) fail(ErrorCode::kDimension, "member: dimension mismatch");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const CycNum c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, basis_[i]);
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(ErrorCode::kDimension, "contains: ambient mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vec& v) { return contains(v); });
}

bool member(const Subspace& s, const Vec& v) { return s.contains(v); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) fail(ErrorCode::kDimension, "sum: ambient mismatch");
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return span(a.ambient_dim(), all);
}

Subspace nullspace(const ExactMatrix& a) {
  const std::size_t n = a.cols();
  EchelonBuilder b(n);
  for (std::size_t r = 0; r < a.rows(); ++r) b.insert(a.row(r));
  std::vector<bool> is_pivot(n, false);
  for (auto p : b.pivots()) is_pivot[p] = true;
  std::vector<Vec> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = CycNum(1L);
    for (std::size_t i = 0; i < b.rank(); ++i) {
      const CycNum& c = b.rows()[i][f];
      if (!c.is_zero()) v[b.pivots()[i]] = -c;
    }
    kernel.push_back(std::move(v));
  }
  return span(n, kernel);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) fail(ErrorCode::kDimension, "intersect: ambient mismatch");
  const std::size_t n = a.ambient_dim();
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  // x * A - y * B = 0, unknowns (x, y); equations are ambient coordinates.
  ExactMatrix m(n, da + db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t c = 0; c < n; ++c) m(c, i) = a.basis()[i][c];
  }
  for (std::size_t j = 0; j < db; ++j) {
    for (std::size_t c = 0; c < n; ++c) m(c, da + j) = -b.basis()[j][c];
  }
  const Subspace ker = nullspace(m);
  std::vector<Vec> out;
  for (const auto& xy : ker.basis()) {
    Vec v(n);
    for (std::size_t i = 0; i < da; ++i) axpy(v, xy[i], a.basis()[i]);
    out.push_back(std::move(v));
  }
  return span(n, out);
}

std::optional<LinearSolution> solve_linear(const ExactMatrix& a, const Vec& rhs) {
  if (rhs.size() != a.rows()) fail(ErrorCode::kDimension, "solve_linear: rhs length mismatch");
  const std::size_t n = a.cols();
  EchelonBuilder b(n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vec row = a.row(r);
    row.push_back(rhs[r]);
    b.insert(std::move(row));
  }
  if (!b.pivots().empty() && b.pivots().back() == n) return std::nullopt;
  LinearSolution sol;
  sol.particular = Vec(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < b.rank(); ++i) {
    is_pivot[b.pivots()[i]] = true;
    sol.particular[b.pivots()[i]] = b.rows()[i][n];
  }
  std::vector<Vec> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = CycNum(1L);
    for (std::size_t i = 0; i < b.rank(); ++i) {
      const CycNum& c = b.rows()[i][f];
      if (!c.is_zero()) v[b.pivots()[i]] = -c;
    }
    kernel.push_back(std::move(v));
  }
  sol.nullspace = span(n, kernel);
  return sol;
}

}  // namespace fqg
