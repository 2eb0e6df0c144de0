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

#include "fqg/hopf.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <Eigen/Dense>

#include "fqg/error.hpp"
#include "parallel.hpp"

namespace fqg {

// ---------------------------------------------------------------------------
// AlgSignature

AlgSignature::AlgSignature(std::vector<int> blocks, std::vector<std::string> names)
    : blocks_(std::move(blocks)), names_(std::move(names)) {
  if (blocks_.empty()) fail(ErrorCode::kInvalidArgument, "algebra needs at least one block");
  std::size_t lines = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const int n = blocks_[b];
    if (n <= 0 || n > 4096) fail(ErrorCode::kInvalidArgument, "block size out of range");
    offsets_.push_back(dim_);
    line_offsets_.push_back(lines);
    lines += static_cast<std::size_t>(n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        block_.push_back(b);
        row_.push_back(static_cast<std::size_t>(r));
        col_.push_back(static_cast<std::size_t>(c));
      }
    }
    dim_ += static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) {
      std::ostringstream os;
      if (blocks_[block_[i]] == 1) {
        os << "u" << block_[i];
      } else {
        os << "u" << block_[i] << "_" << row_[i] << col_[i];
      }
      names_.push_back(os.str());
    }
  } else if (names_.size() != dim_) {
    fail(ErrorCode::kDimension, "basis name count does not match the algebra dimension");
  }
}

std::size_t AlgSignature::index(std::size_t block, std::size_t row, std::size_t col) const {
  const auto n = static_cast<std::size_t>(blocks_[block]);
  return offsets_[block] + row * n + col;
}

std::size_t AlgSignature::star_index(std::size_t i) const { return index(block_[i], col_[i], row_[i]); }

std::optional<std::size_t> AlgSignature::basis_product(std::size_t i, std::size_t j) const {
  if (block_[i] != block_[j] || col_[i] != row_[j]) return std::nullopt;
  return index(block_[i], row_[i], col_[j]);
}

void require_same(const SigPtr& a, const SigPtr& b, const char* where) {
  if (!a || !b) fail(ErrorCode::kPrecondition, std::string(where) + ": uninitialized element");
  if (a != b && !a->same_shape(*b)) fail(ErrorCode::kDimension, std::string(where) + ": algebra mismatch");
}

// ---------------------------------------------------------------------------
// AlgElement

AlgElement::AlgElement(SigPtr sig) : sig_(std::move(sig)), coords_(sig_->dim()) {}

AlgElement::AlgElement(SigPtr sig, Vec coords) : sig_(std::move(sig)), coords_(std::move(coords)) {
  if (coords_.size() != sig_->dim()) fail(ErrorCode::kDimension, "coordinate vector has the wrong length");
}

AlgElement AlgElement::basis(const SigPtr& sig, std::size_t i) {
  AlgElement e(sig);
  e.coords_.at(i) = CycNum(1L);
  return e;
}

AlgElement AlgElement::unit(const SigPtr& sig) {
  AlgElement e(sig);
  for (std::size_t b = 0; b < sig->blocks().size(); ++b) {
    for (int r = 0; r < sig->blocks()[b]; ++r) e.coords_[sig->index(b, r, r)] = CycNum(1L);
  }
  return e;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  require_same(sig_, o.sig_, "add");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!o.coords_[i].is_zero()) coords_[i] += o.coords_[i];
  }
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  require_same(sig_, o.sig_, "subtract");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!o.coords_[i].is_zero()) coords_[i] -= o.coords_[i];
  }
  return *this;
}

AlgElement operator*(const CycNum& c, const AlgElement& x) {
  AlgElement out(x.sig_);
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < x.coords_.size(); ++i) {
    if (!x.coords_[i].is_zero()) out.coords_[i] = c * x.coords_[i];
  }
  return out;
}

AlgElement operator*(const AlgElement& x, const AlgElement& y) {
  require_same(x.sig_, y.sig_, "multiply");
  const AlgSignature& s = *x.sig_;
  AlgElement out(x.sig_);
  // Non-zero entries of y grouped by the line they start on.
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_start;
  for (std::size_t j = 0; j < y.coords_.size(); ++j) {
    if (!y.coords_[j].is_zero()) by_start[s.start_id(j)].push_back(j);
  }
  for (std::size_t i = 0; i < x.coords_.size(); ++i) {
    if (x.coords_[i].is_zero()) continue;
    auto it = by_start.find(s.end_id(i));
    if (it == by_start.end()) continue;
    for (std::size_t j : it->second) {
      out.coords_[*s.basis_product(i, j)] += x.coords_[i] * y.coords_[j];
    }
  }
  return out;
}

bool AlgElement::operator==(const AlgElement& o) const {
  require_same(sig_, o.sig_, "compare");
  return coords_ == o.coords_;
}

AlgElement AlgElement::star() const {
  AlgElement out(sig_);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) out.coords_[sig_->star_index(i)] = coords_[i].conj();
  }
  return out;
}

namespace {

std::string term_string(const CycNum& c, const std::string& name, bool first) {
  std::string coef = c.to_string();
  std::string sign;
  if (coef[0] == '-' && coef.find_first_of("+-", 1) == std::string::npos) {
    sign = "-";
    coef = coef.substr(1);
  } else {
    sign = "+";
  }
  std::string out;
  if (first) {
    out = sign == "-" ? "-" : "";
  } else {
    out = " " + sign + " ";
  }
  if (coef == "1") return out + name;
  if (coef.find_first_of("+-", 1) != std::string::npos) coef = "(" + coef + ")";
  return out + coef + "*" + name;
}

}  // namespace

std::string AlgElement::to_string() const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    out += term_string(coords_[i], sig_->name(i), first);
    first = false;
  }
  return first ? "0" : out;
}

// ---------------------------------------------------------------------------
// TensorElem

TensorElem::TensorElem(SigPtr sig, int arity) : sig_(std::move(sig)), arity_(arity), dim_(sig_->dim()) {
  if (arity != 2 && arity != 3) fail(ErrorCode::kInvalidArgument, "tensor arity must be 2 or 3");
}

TensorElem TensorElem::pure(const AlgElement& x, const AlgElement& y) {
  require_same(x.signature(), y.signature(), "tensor");
  TensorElem t(x.signature(), 2);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.dim(); ++j) {
      if (!y[j].is_zero()) t.add(i, j, x[i] * y[j]);
    }
  }
  return t;
}

TensorElem TensorElem::pure(const AlgElement& x, const AlgElement& y, const AlgElement& z) {
  require_same(x.signature(), y.signature(), "tensor");
  require_same(x.signature(), z.signature(), "tensor");
  TensorElem t(x.signature(), 3);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.dim(); ++j) {
      if (y[j].is_zero()) continue;
      const CycNum xy = x[i] * y[j];
      for (std::size_t k = 0; k < z.dim(); ++k) {
        if (!z[k].is_zero()) t.add(i, j, k, xy * z[k]);
      }
    }
  }
  return t;
}

TensorElem TensorElem::unit(const SigPtr& sig, int arity) {
  const AlgElement one = AlgElement::unit(sig);
  return arity == 2 ? pure(one, one) : pure(one, one, one);
}

namespace {

using FlatTerms = std::vector<std::pair<TensorElem::Key, CycNum>>;

// Sorts by key and merges duplicates, dropping zero sums.
FlatTerms merge_sorted(FlatTerms terms) {
  std::vector<std::uint32_t> order(terms.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return terms[a].first < terms[b].first || (terms[a].first == terms[b].first && a < b);
  });
  FlatTerms out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < order.size();) {
    const TensorElem::Key key = terms[order[i]].first;
    CycNum sum = std::move(terms[order[i]].second);
    std::size_t j = i + 1;
    for (; j < order.size() && terms[order[j]].first == key; ++j) sum += terms[order[j]].second;
    if (!sum.is_zero()) out.emplace_back(key, std::move(sum));
    i = j;
  }
  return out;
}

}  // namespace

TensorElem TensorElem::collect(SigPtr sig, int arity, std::vector<std::pair<Key, CycNum>> terms) {
  TensorElem out(std::move(sig), arity);
  for (auto& [key, c] : merge_sorted(std::move(terms))) out.coeffs_.emplace_hint(out.coeffs_.end(), key, std::move(c));
  return out;
}

TensorElem::Key TensorElem::pack(std::size_t i, std::size_t j, std::size_t k) const {
  if (arity_ == 2) return static_cast<Key>(i) * dim_ + j;
  return (static_cast<Key>(i) * dim_ + j) * dim_ + k;
}

std::array<std::size_t, 3> TensorElem::unpack(Key key) const {
  if (arity_ == 2) return {static_cast<std::size_t>(key / dim_), static_cast<std::size_t>(key % dim_), 0};
  const std::size_t k = key % dim_;
  key /= dim_;
  return {static_cast<std::size_t>(key / dim_), static_cast<std::size_t>(key % dim_), k};
}

void TensorElem::add_key(Key key, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void TensorElem::add(std::size_t i, std::size_t j, const CycNum& c) {
  if (arity_ != 2) fail(ErrorCode::kDimension, "two indices given for a triple tensor");
  if (i >= dim_ || j >= dim_) fail(ErrorCode::kDimension, "tensor index out of range");
  add_key(pack(i, j), c);
}

void TensorElem::add(std::size_t i, std::size_t j, std::size_t k, const CycNum& c) {
  if (arity_ != 3) fail(ErrorCode::kDimension, "three indices given for a double tensor");
  if (i >= dim_ || j >= dim_ || k >= dim_) fail(ErrorCode::kDimension, "tensor index out of range");
  add_key(pack(i, j, k), c);
}

CycNum TensorElem::get(std::size_t i, std::size_t j) const {
  auto it = coeffs_.find(pack(i, j));
  return it == coeffs_.end() ? CycNum() : it->second;
}

CycNum TensorElem::get(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = coeffs_.find(pack(i, j, k));
  return it == coeffs_.end() ? CycNum() : it->second;
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  require_same(sig_, o.sig_, "tensor add");
  if (arity_ != o.arity_) fail(ErrorCode::kDimension, "tensor arity mismatch");
  for (const auto& [k, c] : o.coeffs_) add_key(k, c);
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  require_same(sig_, o.sig_, "tensor subtract");
  if (arity_ != o.arity_) fail(ErrorCode::kDimension, "tensor arity mismatch");
  for (const auto& [k, c] : o.coeffs_) add_key(k, -c);
  return *this;
}

TensorElem operator*(const CycNum& c, const TensorElem& t) {
  TensorElem out(t.sig_, t.arity_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : t.coeffs_) out.coeffs_.emplace_hint(out.coeffs_.end(), k, c * v);
  return out;
}

bool TensorElem::operator==(const TensorElem& o) const {
  require_same(sig_, o.sig_, "tensor compare");
  return arity_ == o.arity_ && coeffs_ == o.coeffs_;
}

std::string TensorElem::to_string(std::size_t max_terms) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  std::size_t n = 0;
  for (const auto& [key, c] : coeffs_) {
    if (n == max_terms) {
      out += " + ... (" + std::to_string(coeffs_.size() - n) + " more terms)";
      break;
    }
    const auto idx = unpack(key);
    std::string name = sig_->name(idx[0]) + " (x) " + sig_->name(idx[1]);
    if (arity_ == 3) name += " (x) " + sig_->name(idx[2]);
    out += term_string(c, name, n == 0);
    ++n;
  }
  return out;
}

TensorElem tensor_mul(const TensorElem& s, const TensorElem& t) {
  require_same(s.signature(), t.signature(), "tensor multiply");
  if (s.arity() != t.arity()) fail(ErrorCode::kDimension, "tensor arity mismatch");
  const AlgSignature& sig = *s.signature();
  const int arity = s.arity();
  std::size_t lines = 0;
  for (int b : sig.blocks()) lines += static_cast<std::size_t>(b);
  auto line_key = [&](const std::array<std::size_t, 3>& ids) {
    std::uint64_t k = 0;
    for (int a = 0; a < arity; ++a) k = k * lines + ids[a];
    return k;
  };
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::array<std::size_t, 3>, const CycNum*>>> index;
  for (const auto& [key, c] : t.coeffs()) {
    const auto idx = t.unpack(key);
    std::array<std::size_t, 3> starts{};
    for (int a = 0; a < arity; ++a) starts[a] = sig.start_id(idx[a]);
    index[line_key(starts)].push_back({idx, &c});
  }
  TensorElem out(s.signature(), arity);
  for (const auto& [key, c] : s.coeffs()) {
    const auto idx = s.unpack(key);
    std::array<std::size_t, 3> ends{};
    for (int a = 0; a < arity; ++a) ends[a] = sig.end_id(idx[a]);
    auto it = index.find(line_key(ends));
    if (it == index.end()) continue;
    for (const auto& [jdx, d] : it->second) {
      std::array<std::size_t, 3> p{};
      for (int a = 0; a < arity; ++a) p[a] = *sig.basis_product(idx[a], jdx[a]);
      out.add_key(out.pack(p[0], p[1], p[2]), c * *d);
    }
  }
  return out;
}

TensorElem tensor_star(const TensorElem& t) {
  const AlgSignature& sig = *t.signature();
  TensorElem out(t.signature(), t.arity());
  for (const auto& [key, c] : t.coeffs()) {
    const auto idx = t.unpack(key);
    out.add_key(out.pack(sig.star_index(idx[0]), sig.star_index(idx[1]),
                         t.arity() == 3 ? sig.star_index(idx[2]) : 0),
                c.conj());
  }
  return out;
}

TensorElem flip(const TensorElem& t) {
  if (t.arity() != 2) fail(ErrorCode::kDimension, "flip needs a double tensor");
  TensorElem out(t.signature(), 2);
  for (const auto& [key, c] : t.coeffs()) {
    const auto idx = t.unpack(key);
    out.add_key(out.pack(idx[1], idx[0]), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Functional

Functional::Functional(SigPtr sig) : sig_(std::move(sig)), values_(sig_->dim()) {}

Functional::Functional(SigPtr sig, Vec values) : sig_(std::move(sig)), values_(std::move(values)) {
  if (values_.size() != sig_->dim()) fail(ErrorCode::kDimension, "functional has the wrong length");
}

CycNum Functional::operator()(const AlgElement& x) const {
  require_same(sig_, x.signature(), "evaluate");
  CycNum s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values_[i].is_zero() && !x[i].is_zero()) s += values_[i] * x[i];
  }
  return s;
}

bool Functional::operator==(const Functional& o) const {
  require_same(sig_, o.sig_, "compare");
  return values_ == o.values_;
}

std::string Functional::to_string() const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].is_zero()) continue;
    out += term_string(values_[i], sig_->name(i) + "*", first);
    first = false;
  }
  return first ? "0" : out;
}

// ---------------------------------------------------------------------------
// Hopf structure maps

HopfData make_hopf_shell(SigPtr sig, std::string name) {
  HopfData h;
  h.sig = sig;
  h.unit = AlgElement::unit(sig);
  h.counit = zero_vec(sig->dim());
  h.delta.assign(sig->dim(), TensorElem(sig, 2));
  h.antipode.assign(sig->dim(), AlgElement(sig));
  h.name = std::move(name);
  return h;
}

TensorElem delta_of(const HopfData& h, const AlgElement& x) {
  require_same(h.sig, x.signature(), "delta");
  TensorElem out(h.sig, 2);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i].is_zero()) continue;
    if (x[i].is_one()) {
      out += h.delta[i];
    } else {
      out += x[i] * h.delta[i];
    }
  }
  return out;
}

CycNum counit_of(const HopfData& h, const AlgElement& x) {
  require_same(h.sig, x.signature(), "counit");
  CycNum s;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!x[i].is_zero() && !h.counit[i].is_zero()) s += x[i] * h.counit[i];
  }
  return s;
}

AlgElement antipode_of(const HopfData& h, const AlgElement& x) {
  require_same(h.sig, x.signature(), "antipode");
  AlgElement out(h.sig);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!x[i].is_zero()) out += x[i] * h.antipode[i];
  }
  return out;
}

AlgElement apply_right(const TensorElem& t, const Functional& phi) {
  if (t.arity() != 2) fail(ErrorCode::kDimension, "slice needs a double tensor");
  AlgElement out(t.signature());
  for (const auto& [key, c] : t.coeffs()) {
    const auto idx = t.unpack(key);
    const CycNum& v = phi.at(idx[1]);
    if (!v.is_zero()) out[idx[0]] += c * v;
  }
  return out;
}

AlgElement apply_left(const Functional& phi, const TensorElem& t) {
  if (t.arity() != 2) fail(ErrorCode::kDimension, "slice needs a double tensor");
  AlgElement out(t.signature());
  for (const auto& [key, c] : t.coeffs()) {
    const auto idx = t.unpack(key);
    const CycNum& v = phi.at(idx[0]);
    if (!v.is_zero()) out[idx[1]] += c * v;
  }
  return out;
}

namespace {

FlatTerms delta_left_terms(const HopfData& h, const TensorElem& t) {
  const TensorElem::Key d = h.dim();
  std::size_t n = 0;
  for (const auto& [key, c] : t.coeffs()) n += h.delta[t.unpack(key)[0]].size();
  FlatTerms terms;
  terms.reserve(n);
  for (const auto& [key, c] : t.coeffs()) {
    const auto idx = t.unpack(key);
    // (i, j) of Delta(b_idx0) packs to i*d + j, so the triple key is that times d plus idx1.
    for (const auto& [k2, v] : h.delta[idx[0]].coeffs()) terms.emplace_back(k2 * d + idx[1], c * v);
  }
  return merge_sorted(std::move(terms));
}

FlatTerms delta_right_terms(const HopfData& h, const TensorElem& t) {
  const TensorElem::Key d = h.dim();
  std::size_t n = 0;
  for (const auto& [key, c] : t.coeffs()) n += h.delta[t.unpack(key)[1]].size();
  FlatTerms terms;
  terms.reserve(n);
  for (const auto& [key, c] : t.coeffs()) {
    const auto idx = t.unpack(key);
    for (const auto& [k2, v] : h.delta[idx[1]].coeffs()) terms.emplace_back(idx[0] * d * d + k2, c * v);
  }
  return merge_sorted(std::move(terms));
}

}  // namespace

TensorElem delta_left(const HopfData& h, const TensorElem& t) {
  return TensorElem::collect(h.sig, 3, delta_left_terms(h, t));
}

TensorElem delta_right(const HopfData& h, const TensorElem& t) {
  return TensorElem::collect(h.sig, 3, delta_right_terms(h, t));
}

Functional convolve(const HopfData& h, const Functional& phi, const Functional& psi) {
  require_same(h.sig, phi.signature(), "convolve");
  require_same(h.sig, psi.signature(), "convolve");
  Functional out(h.sig);
  for (std::size_t b = 0; b < h.dim(); ++b) {
    CycNum s;
    for (const auto& [key, c] : h.delta[b].coeffs()) {
      const auto idx = h.delta[b].unpack(key);
      const CycNum& x = phi.at(idx[0]);
      if (x.is_zero()) continue;
      const CycNum& y = psi.at(idx[1]);
      if (!y.is_zero()) s += c * x * y;
    }
    out.values()[b] = s;
  }
  return out;
}

Functional counit_functional(const HopfData& h) { return Functional(h.sig, h.counit); }

// ---------------------------------------------------------------------------
// Axiom verification

bool AxiomReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const AxiomResult& r) { return r.passed || r.informational; });
}

const AxiomResult* AxiomReport::find(const std::string& axiom) const {
  for (const auto& r : results) {
    if (r.axiom == axiom) return &r;
  }
  return nullptr;
}

std::optional<std::string> AxiomReport::first_failure() const {
  for (const auto& r : results) {
    if (!r.passed && !r.informational) return r.axiom + (r.witness ? " at " + *r.witness : std::string());
  }
  return std::nullopt;
}

namespace {

// Collects the first failing index of a per-basis check, independent of the
// order in which parallel workers finish.
// Indices above a known failure are skipped; every index below it is still
// checked, so the reported minimum does not depend on scheduling.
class FirstFailure {
 public:
  explicit FirstFailure(std::size_t n) : diffs_(n), bound_(n) {}
  bool skip(std::size_t i) const { return i > bound_.load(); }
  void record(std::size_t i, std::string diff) {
    diffs_[i] = std::move(diff);
    std::size_t cur = bound_.load();
    while (i < cur && !bound_.compare_exchange_weak(cur, i)) {
    }
  }
  std::optional<std::size_t> first() const {
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
      if (diffs_[i]) return i;
    }
    return std::nullopt;
  }
  const std::string& diff(std::size_t i) const { return *diffs_[i]; }

 private:
  std::vector<std::optional<std::string>> diffs_;
  std::atomic<std::size_t> bound_;
};

AxiomResult per_basis(const std::string& axiom, const HopfData& h,
                      const std::function<std::optional<std::string>(std::size_t)>& check) {
  FirstFailure ff(h.dim());
  detail::parallel_for(h.dim(), [&](std::size_t b) {
    if (ff.skip(b)) return;
    if (auto d = check(b)) ff.record(b, std::move(*d));
  });
  AxiomResult r;
  r.axiom = axiom;
  if (auto b = ff.first()) {
    r.passed = false;
    r.witness = h.sig->name(*b);
    r.difference = ff.diff(*b);
  }
  return r;
}

AxiomResult per_pair(const std::string& axiom, const HopfData& h,
                     const std::function<std::optional<std::string>(std::size_t, std::size_t)>& check) {
  const std::size_t d = h.dim();
  FirstFailure ff(d * d);
  detail::parallel_for(d, [&](std::size_t i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (ff.skip(i * d + j)) return;
      if (auto diff = check(i, j)) {
        ff.record(i * d + j, std::move(*diff));
        return;
      }
    }
  });
  AxiomResult r;
  r.axiom = axiom;
  if (auto p = ff.first()) {
    r.passed = false;
    r.witness = "(" + h.sig->name(*p / d) + ", " + h.sig->name(*p % d) + ")";
    r.difference = ff.diff(*p);
  }
  return r;
}

std::optional<std::string> diff_alg(const AlgElement& a, const AlgElement& b) {
  if (a == b) return std::nullopt;
  return (a - b).to_string();
}

std::optional<std::string> diff_tensor(const TensorElem& a, const TensorElem& b) {
  if (a == b) return std::nullopt;
  return (a - b).to_string();
}

std::optional<std::string> diff_scalar(const CycNum& a, const CycNum& b) {
  if (a == b) return std::nullopt;
  return (a - b).to_string();
}

void check_shapes(const HopfData& h) {
  const std::size_t d = h.dim();
  if (h.delta.size() != d || h.counit.size() != d || h.antipode.size() != d) {
    fail(ErrorCode::kDimension, "Hopf tables do not match the algebra dimension");
  }
  for (const auto& t : h.delta) {
    if (t.arity() != 2) fail(ErrorCode::kDimension, "comultiplication entries must be double tensors");
    require_same(h.sig, t.signature(), "delta table");
  }
  for (const auto& a : h.antipode) require_same(h.sig, a.signature(), "antipode table");
}

// Exact test that f (given on matrix units) is a unital homomorphism into an
// algebra with product `mul`. Put Q_x = f(E_xx) for every line x. In a
// multi-matrix algebra over a field of characteristic 0, idempotents summing to
// 1 are pairwise orthogonal (compare traces with ranks), so f is multiplicative
// iff: every Q_x is idempotent, sum Q_x = 1, f(E_rc) = Q_r f(E_rc) Q_c, and
// f(E_rc) f(E_cd) = f(E_rd) inside each block. This needs O(sum n^3) products
// instead of dim^2.
template <class T, class F, class Mul>
bool unital_hom_via_units(const AlgSignature& sig, F&& f, Mul&& mul, const T& one, T zero) {
  std::vector<std::size_t> diag;
  for (std::size_t b = 0; b < sig.blocks().size(); ++b) {
    for (int r = 0; r < sig.blocks()[b]; ++r) diag.push_back(sig.index(b, r, r));
  }
  T total = zero;
  for (std::size_t x : diag) total += f(x);
  if (!(total == one)) return false;
  std::vector<char> ok(sig.dim(), 1);
  detail::parallel_for(sig.dim(), [&](std::size_t i) {
    const std::size_t b = sig.block_of(i);
    const std::size_t r = sig.row_of(i), c = sig.col_of(i);
    const T& fi = f(i);
    if (r == c) {
      ok[i] = mul(fi, fi) == fi;
      return;
    }
    const T& qr = f(sig.index(b, r, r));
    const T& qc = f(sig.index(b, c, c));
    if (!(mul(mul(qr, fi), qc) == fi)) {
      ok[i] = 0;
      return;
    }
    const auto n = static_cast<std::size_t>(sig.blocks()[b]);
    for (std::size_t d = 0; d < n; ++d) {
      if (!(mul(fi, f(sig.index(b, c, d))) == f(sig.index(b, r, d)))) {
        ok[i] = 0;
        return;
      }
    }
  });
  // Products E_rr E_rd and E_rc E_cc are covered by the conjugation condition.
  return std::all_of(ok.begin(), ok.end(), [](char v) { return v != 0; });
}

}  // namespace

AxiomReport verify_hopf(const HopfData& h, const VerifyOptions& options) {
  check_shapes(h);
  AxiomReport rep;
  auto stop = [&] { return options.stop_at_first_failure && !rep.all_passed(); };
  const auto& sig = h.sig;

  rep.results.push_back(per_basis("coassociativity", h, [&](std::size_t b) -> std::optional<std::string> {
    FlatTerms lhs = delta_left_terms(h, h.delta[b]);
    FlatTerms rhs = delta_right_terms(h, h.delta[b]);
    if (lhs == rhs) return std::nullopt;
    return diff_tensor(TensorElem::collect(sig, 3, std::move(lhs)), TensorElem::collect(sig, 3, std::move(rhs)));
  }));

  if (stop()) return rep;
  const Functional eps = counit_functional(h);
  rep.results.push_back(per_basis("counit_left", h, [&](std::size_t b) {
    return diff_alg(apply_left(eps, h.delta[b]), AlgElement::basis(sig, b));
  }));
  if (stop()) return rep;
  rep.results.push_back(per_basis("counit_right", h, [&](std::size_t b) {
    return diff_alg(apply_right(h.delta[b], eps), AlgElement::basis(sig, b));
  }));

  auto antipode_check = [&](bool left) {
    return [&h, &sig, left](std::size_t b) {
      AlgElement acc(sig);
      for (const auto& [key, c] : h.delta[b].coeffs()) {
        const auto idx = h.delta[b].unpack(key);
        if (left) {
          const AlgElement& x = h.antipode[idx[0]];
          for (std::size_t i = 0; i < x.dim(); ++i) {
            if (x[i].is_zero()) continue;
            if (auto p = sig->basis_product(i, idx[1])) acc[*p] += c * x[i];
          }
        } else {
          const AlgElement& y = h.antipode[idx[1]];
          for (std::size_t j = 0; j < y.dim(); ++j) {
            if (y[j].is_zero()) continue;
            if (auto p = sig->basis_product(idx[0], j)) acc[*p] += c * y[j];
          }
        }
      }
      return diff_alg(acc, h.counit[b] * h.unit);
    };
  };
  if (stop()) return rep;
  rep.results.push_back(per_basis("antipode_left", h, antipode_check(true)));
  if (stop()) return rep;
  rep.results.push_back(per_basis("antipode_right", h, antipode_check(false)));

  if (stop()) return rep;
  {
    const bool fast = unital_hom_via_units(
        *sig, [&](std::size_t i) -> const TensorElem& { return h.delta[i]; },
        [](const TensorElem& a, const TensorElem& b) { return tensor_mul(a, b); }, TensorElem::unit(sig, 2),
        TensorElem(sig, 2));
    if (fast) {
      AxiomResult r;
      r.axiom = "delta_multiplicative";
      rep.results.push_back(r);
    } else {
      rep.results.push_back(per_pair("delta_multiplicative", h, [&](std::size_t i, std::size_t j) {
        const TensorElem lhs = tensor_mul(h.delta[i], h.delta[j]);
        const auto p = sig->basis_product(i, j);
        return diff_tensor(lhs, p ? h.delta[*p] : TensorElem(sig, 2));
      }));
    }
  }
  if (stop()) return rep;
  {
    AxiomResult r;
    r.axiom = "delta_unital";
    if (auto diff = diff_tensor(delta_of(h, h.unit), TensorElem::unit(sig, 2))) {
      r.passed = false;
      r.witness = "1";
      r.difference = diff;
    }
    rep.results.push_back(r);
  }
  if (stop()) return rep;
  rep.results.push_back(per_pair("counit_multiplicative", h, [&](std::size_t i, std::size_t j) {
    const auto p = sig->basis_product(i, j);
    return diff_scalar(p ? h.counit[*p] : CycNum(), h.counit[i] * h.counit[j]);
  }));
  if (stop()) return rep;
  {
    AxiomResult r;
    r.axiom = "counit_unital";
    if (auto diff = diff_scalar(counit_of(h, h.unit), CycNum(1L))) {
      r.passed = false;
      r.witness = "1";
      r.difference = diff;
    }
    rep.results.push_back(r);
  }
  if (stop()) return rep;
  {
    const bool fast = unital_hom_via_units(
        *sig, [&](std::size_t i) -> const AlgElement& { return h.antipode[i]; },
        [](const AlgElement& a, const AlgElement& b) { return b * a; }, h.unit, AlgElement(sig));
    if (fast) {
      AxiomResult r;
      r.axiom = "antipode_antimultiplicative";
      rep.results.push_back(r);
    } else {
      rep.results.push_back(per_pair("antipode_antimultiplicative", h, [&](std::size_t i, std::size_t j) {
        const auto p = sig->basis_product(i, j);
        return diff_alg(p ? h.antipode[*p] : AlgElement(sig), h.antipode[j] * h.antipode[i]);
      }));
    }
  }
  if (stop()) return rep;
  rep.results.push_back(per_basis("delta_star", h, [&](std::size_t b) {
    return diff_tensor(h.delta[sig->star_index(b)], tensor_star(h.delta[b]));
  }));
  if (stop()) return rep;
  rep.results.push_back(per_basis("counit_star", h, [&](std::size_t b) {
    return diff_scalar(h.counit[sig->star_index(b)], h.counit[b].conj());
  }));
  if (stop()) return rep;
  {
    AxiomResult r = per_basis("antipode_star_involution", h, [&](std::size_t b) {
      return diff_alg(antipode_of(h, antipode_of(h, AlgElement::basis(sig, b)).star()).star(),
                      AlgElement::basis(sig, b));
    });
    r.informational = true;
    rep.results.push_back(r);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Haar state

PositivityCheck check_positivity(const HopfData& h, const Functional& phi, unsigned tolerance_bits) {
  const std::size_t d = h.dim();
  const auto& sig = *h.sig;
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  std::vector<std::complex<double>> vals(d);
  for (std::size_t i = 0; i < d; ++i) vals[i] = phi.at(i).approx();
  for (std::size_t u = 0; u < d; ++u) {
    const std::size_t us = sig.star_index(u);
    for (std::size_t v = 0; v < d; ++v) {
      if (auto p = sig.basis_product(us, v)) {
        g(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = vals[*p];
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
  PositivityCheck out;
  out.tolerance = std::ldexp(1.0, -static_cast<int>(tolerance_bits));
  out.min_eigenvalue = d ? es.eigenvalues().minCoeff() : 0.0;
  out.passed = out.min_eigenvalue >= -out.tolerance;
  return out;
}

HaarReport verify_haar(const HopfData& h, const Functional& candidate, unsigned tolerance_bits) {
  require_same(h.sig, candidate.signature(), "verify_haar");
  HaarReport rep;
  rep.normalized = candidate(h.unit).is_one();
  if (!rep.normalized) rep.witness = "h(1) = " + candidate(h.unit).to_string();
  auto invariant = [&](bool left) {
    for (std::size_t b = 0; b < h.dim(); ++b) {
      const AlgElement lhs = left ? apply_right(h.delta[b], candidate) : apply_left(candidate, h.delta[b]);
      if (!(lhs == candidate.at(b) * h.unit)) {
        if (!rep.witness) rep.witness = std::string(left ? "left" : "right") + " invariance at " + h.sig->name(b);
        return false;
      }
    }
    return true;
  };
  rep.left_invariant = invariant(true);
  rep.right_invariant = invariant(false);
  rep.hermitian = true;
  for (std::size_t b = 0; b < h.dim(); ++b) {
    if (candidate.at(h.sig->star_index(b)) != candidate.at(b).conj()) {
      rep.hermitian = false;
      if (!rep.witness) rep.witness = "hermitian at " + h.sig->name(b);
      break;
    }
  }
  rep.positivity = check_positivity(h, candidate, tolerance_bits);
  return rep;
}

Functional solve_haar(const HopfData& h) {
  const std::size_t d = h.dim();
  // Unknowns h_0..h_{d-1}. Left invariance gives, for every basis element b
  // and output coordinate a, sum_{(a,j)} c_{aj} h_j - h_b [1]_a = 0.
  EchelonBuilder eqs(d + 1);
  Vec norm(d + 1);
  for (std::size_t i = 0; i < d; ++i) norm[i] = h.unit[i];
  norm[d] = CycNum(1L);
  eqs.insert(norm);
  for (std::size_t b = 0; b < d && eqs.rank() < d; ++b) {
    std::map<std::size_t, Vec> rows;
    for (const auto& [key, c] : h.delta[b].coeffs()) {
      const auto idx = h.delta[b].unpack(key);
      auto& row = rows.try_emplace(idx[0], Vec(d + 1)).first->second;
      row[idx[1]] += c;
    }
    for (std::size_t a = 0; a < d; ++a) {
      if (h.unit[a].is_zero()) continue;
      auto& row = rows.try_emplace(a, Vec(d + 1)).first->second;
      row[b] -= h.unit[a];
    }
    for (auto& [a, row] : rows) {
      if (!is_zero(row)) eqs.insert(std::move(row));
      if (eqs.rank() == d) break;
    }
  }
  if (eqs.rank() < d) fail(ErrorCode::kStructure, "invariant functional is not unique");
  for (std::size_t p : eqs.pivots()) {
    if (p == d) fail(ErrorCode::kStructure, "no normalized invariant functional");
  }
  // Reduced rows read h_p = rhs.
  Functional out(h.sig);
  for (std::size_t r = 0; r < eqs.rank(); ++r) out.values()[eqs.pivots()[r]] = eqs.rows()[r][d];
  const HaarReport check = verify_haar(h, out);
  if (!check.normalized || !check.left_invariant) {
    fail(ErrorCode::kStructure, "no normalized invariant functional");
  }
  return out;
}

unsigned worker_threads() {
  if (const char* env = std::getenv("FQG_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace fqg
