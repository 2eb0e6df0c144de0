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

#include "fqg/coideal.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <utility>

#include "fqg/error.hpp"
#include "parallel.hpp"

namespace fqg {

namespace {

using Sparse = std::vector<std::pair<std::size_t, CycNum>>;

Sparse sparse_of(const AlgElement& x) {
  Sparse out;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!x[i].is_zero()) out.emplace_back(i, x[i]);
  }
  return out;
}

// Non-zero entries grouped by the line their matrix unit starts on.
using ByStart = std::unordered_map<std::size_t, Sparse>;

ByStart group_by_start(const AlgSignature& s, const Sparse& x) {
  ByStart out;
  for (const auto& [i, c] : x) out[s.start_id(i)].emplace_back(i, c);
  return out;
}

void require_state(const HopfData& h, const Functional& phi, const char* what) {
  require_same(h.sig, phi.signature(), what);
  if (phi(h.unit) != CycNum(1)) fail(ErrorCode::kPrecondition, std::string(what) + ": not a state (phi(1) != 1)");
}

bool subspace_has(const Subspace& s, const AlgElement& x) { return s.contains(x.coords()); }

}  // namespace

bool Flag::value() const {
  if (!value_) fail(ErrorCode::kPrecondition, "flag has not been computed");
  return *value_;
}

void Flag::set(bool v) {
  if (value_ && *value_ != v) fail(ErrorCode::kStructure, "flag recomputation disagrees with cached value");
  value_ = v;
}

std::vector<AlgElement> basis_elements(const HopfData& h, const Subspace& s) {
  if (s.ambient_dim() != h.dim()) fail(ErrorCode::kDimension, "subspace ambient dimension mismatch");
  std::vector<AlgElement> out;
  out.reserve(s.dim());
  for (const Vec& v : s.basis()) out.emplace_back(h.sig, v);
  return out;
}

bool delta_in_left_coideal(const HopfData& h, const AlgElement& x, const Subspace& s) {
  const TensorElem d = delta_of(h, x);
  std::map<std::size_t, Vec> legs;
  for (const auto& [key, c] : d.coeffs()) {
    const auto idx = d.unpack(key);
    auto [it, fresh] = legs.try_emplace(idx[0]);
    if (fresh) it->second = zero_vec(h.dim());
    it->second[idx[1]] += c;
  }
  return std::all_of(legs.begin(), legs.end(), [&](const auto& kv) { return s.contains(kv.second); });
}

bool is_multiplicatively_closed(const HopfData& h, const Subspace& s) {
  const auto b = basis_elements(h, s);
  std::vector<char> ok(b.size(), 1);
  detail::parallel_for(b.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < b.size() && ok[i]; ++j) {
      if (!subspace_has(s, b[i] * b[j])) ok[i] = 0;
    }
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

Coideal make_coideal(const HopfData& h, Subspace s, std::string label) {
  if (s.ambient_dim() != h.dim()) fail(ErrorCode::kDimension, "subspace ambient dimension mismatch");
  Coideal c;
  c.label = std::move(label);
  c.subspace = std::move(s);
  c.is_unital.set(c.subspace.contains(h.unit.coords()));
  const auto b = basis_elements(h, c.subspace);
  c.is_star_closed.set(std::all_of(b.begin(), b.end(), [&](const AlgElement& x) { return subspace_has(c.subspace, x.star()); }));
  std::vector<char> ok(b.size(), 1);
  detail::parallel_for(b.size(), [&](std::size_t i) { ok[i] = delta_in_left_coideal(h, b[i], c.subspace) ? 1 : 0; });
  c.is_coideal.set(std::all_of(ok.begin(), ok.end(), [](char v) { return v != 0; }));
  return c;
}

Coideal trivial_coideal(const HopfData& h) {
  Coideal c = make_coideal(h, span(h.dim(), {h.unit.coords()}), "C1");
  c.integral = h.unit;
  c.integral_is_projection = true;
  c.is_subalgebra.set(true);
  c.is_normal.set(true);
  return c;
}

Coideal full_coideal(const HopfData& h) {
  std::vector<Vec> all;
  for (std::size_t i = 0; i < h.dim(); ++i) all.push_back(h.basis(i).coords());
  Coideal c = make_coideal(h, span(h.dim(), all), "A");
  c.is_subalgebra.set(true);
  c.is_normal.set(true);
  return c;
}

bool is_state_normalized(const HopfData& h, const Functional& phi) {
  require_same(h.sig, phi.signature(), "state");
  return phi(h.unit) == CycNum(1);
}

bool is_idempotent_state(const HopfData& h, const Functional& phi) {
  require_state(h, phi, "is_idempotent_state");
  return convolve(h, phi, phi) == phi;
}

bool state_leq(const HopfData& h, const Functional& phi, const Functional& psi) {
  if (!is_idempotent_state(h, phi) || !is_idempotent_state(h, psi)) {
    fail(ErrorCode::kPrecondition, "state_leq needs idempotent states");
  }
  return convolve(h, phi, psi) == psi;
}

Coideal coideal_from_state(const HopfData& h, const Functional& phi, std::string label) {
  if (!is_idempotent_state(h, phi)) fail(ErrorCode::kPrecondition, "coideal_from_state needs an idempotent state");
  std::vector<Vec> image(h.dim());
  detail::parallel_for(h.dim(), [&](std::size_t b) { image[b] = apply_right(h.delta[b], phi).coords(); });
  Coideal c = make_coideal(h, span(h.dim(), image), std::move(label));
  c.source_state = phi;
  return c;
}

bool is_group_like_projection(const HopfData& h, const AlgElement& p) {
  require_same(h.sig, p.signature(), "group-like test");
  if (p.is_zero()) return false;
  if (!(p.star() == p) || !(p * p == p)) return false;
  const TensorElem lhs = tensor_mul(delta_of(h, p), TensorElem::pure(h.unit, p));
  return lhs == TensorElem::pure(p, p);
}

Functional state_from_projection(const HopfData& h, const AlgElement& p) {
  if (!h.haar) fail(ErrorCode::kPrecondition, "state_from_projection needs a Haar state");
  if (!is_group_like_projection(h, p)) fail(ErrorCode::kPrecondition, "not a group-like projection");
  const CycNum hp = (*h.haar)(p);
  if (hp.is_zero()) fail(ErrorCode::kPrecondition, "degenerate projection: h(p) = 0");
  const CycNum inv = hp.inverse();
  Functional out(h.sig);
  const Sparse ps = sparse_of(p);
  const ByStart grouped = group_by_start(*h.sig, ps);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    auto it = grouped.find(h.sig->end_id(i));
    if (it == grouped.end()) continue;
    CycNum s;
    for (const auto& [j, c] : it->second) s += c * h.haar->at(*h.sig->basis_product(i, j));
    out.values()[i] = s * inv;
  }
  return out;
}

AlgElement find_integral(const HopfData& h, const Coideal& c, bool* is_projection) {
  if (c.is_coideal.known() && !c.is_coideal.value()) fail(ErrorCode::kPrecondition, "find_integral needs a left coideal");
  const auto v = basis_elements(h, c.subspace);
  const std::size_t m = v.size();
  if (m == 0) fail(ErrorCode::kStructure, "empty coideal has no integral");
  // Column k of the system holds v_k x - eps(x) v_k and x v_k - eps(x) v_k.
  std::vector<std::vector<Vec>> rows_per_x(m);
  detail::parallel_for(m, [&](std::size_t t) {
    const AlgElement& x = v[t];
    const CycNum ex = counit_of(h, x);
    std::vector<AlgElement> right(m), left(m);
    for (std::size_t k = 0; k < m; ++k) {
      right[k] = v[k] * x - ex * v[k];
      left[k] = x * v[k] - ex * v[k];
    }
    EchelonBuilder eb(m);
    for (const auto* side : {&right, &left}) {
      for (std::size_t i = 0; i < h.dim(); ++i) {
        Vec row(m);
        bool any = false;
        for (std::size_t k = 0; k < m; ++k) {
          row[k] = (*side)[k][i];
          any = any || !row[k].is_zero();
        }
        if (any) eb.insert(std::move(row));
      }
    }
    rows_per_x[t] = eb.rows();
  });
  EchelonBuilder all(m);
  for (auto& rows : rows_per_x) {
    for (auto& r : rows) all.insert(std::move(r));
  }
  const Subspace sol = nullspace(ExactMatrix::from_rows(all.rows(), m));
  if (sol.dim() != 1) {
    fail(ErrorCode::kStructure, "integral solution space has dimension " + std::to_string(sol.dim()));
  }
  AlgElement l(h.sig);
  for (std::size_t k = 0; k < m; ++k) {
    if (!sol.basis()[0][k].is_zero()) l += sol.basis()[0][k] * v[k];
  }
  const CycNum el = counit_of(h, l);
  bool projection = false;
  if (!el.is_zero()) {
    l = el.inverse() * l;
    projection = l * l == l && l.star() == l;
  } else {
    for (std::size_t i = 0; i < l.dim(); ++i) {
      if (!l[i].is_zero()) {
        l = l[i].inverse() * l;
        break;
      }
    }
  }
  if (is_projection) *is_projection = projection;
  return l;
}

void attach_integral(const HopfData& h, Coideal& c) {
  if (c.integral) return;
  bool proj = false;
  c.integral = find_integral(h, c, &proj);
  c.integral_is_projection = proj;
}

AlgElement adjoint_action(const HopfData& h, const AlgElement& a, const AlgElement& b) {
  require_same(h.sig, a.signature(), "adjoint action");
  require_same(h.sig, b.signature(), "adjoint action");
  const AlgSignature& s = *h.sig;
  const ByStart bb = group_by_start(s, sparse_of(b));
  std::unordered_map<std::size_t, ByStart> antipode_cache;
  AlgElement out(h.sig);
  const TensorElem d = delta_of(h, a);
  for (const auto& [key, c] : d.coeffs()) {
    const auto idx = d.unpack(key);
    const std::size_t u = idx[0], v = idx[1];
    auto it = bb.find(s.end_id(u));
    if (it == bb.end()) continue;
    auto sit = antipode_cache.find(v);
    if (sit == antipode_cache.end()) {
      sit = antipode_cache.emplace(v, group_by_start(s, sparse_of(h.antipode[v]))).first;
    }
    for (const auto& [j, bj] : it->second) {
      const std::size_t uj = *s.basis_product(u, j);
      auto st = sit->second.find(s.end_id(uj));
      if (st == sit->second.end()) continue;
      const CycNum cb = c * bj;
      for (const auto& [w, sw] : st->second) out[*s.basis_product(uj, w)] += cb * sw;
    }
  }
  return out;
}

bool is_normal_coideal(const HopfData& h, Coideal& c, std::optional<NormalityWitness>* witness) {
  if (!c.is_coideal.known()) {
    const auto b = basis_elements(h, c.subspace);
    c.is_coideal.set(std::all_of(b.begin(), b.end(), [&](const AlgElement& x) { return delta_in_left_coideal(h, x, c.subspace); }));
  }
  if (!c.is_coideal.value()) fail(ErrorCode::kPrecondition, "normality test needs a left coideal");
  const auto xs = basis_elements(h, c.subspace);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> bad(h.dim(), kNone);
  detail::parallel_for(h.dim(), [&](std::size_t a) {
    const AlgElement ea = h.basis(a);
    for (std::size_t x = 0; x < xs.size(); ++x) {
      if (!subspace_has(c.subspace, adjoint_action(h, ea, xs[x]))) {
        bad[a] = x;
        return;
      }
    }
  });
  bool normal = true;
  for (std::size_t a = 0; a < bad.size(); ++a) {
    if (bad[a] != kNone) {
      normal = false;
      if (witness) *witness = NormalityWitness{a, bad[a]};
      break;
    }
  }
  if (normal && witness) witness->reset();
  c.is_normal.set(normal);
  return normal;
}

}  // namespace fqg
