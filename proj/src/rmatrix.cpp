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

#include "fqg/rmatrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <utility>

#include "fqg/error.hpp"
#include "fqg/models.hpp"

namespace fqg {

namespace {

// ---------------------------------------------------------------------------
// Tensor helpers

std::optional<std::string> tensor_diff(const TensorElem& a, const TensorElem& b) {
  if (a == b) return std::nullopt;
  return (a - b).to_string(6);
}

TensorElem delta_op_of(const HopfData& h, const AlgElement& x) { return flip(delta_of(h, x)); }

TensorElem delta_tensor_left(const HopfData& h, const TensorElem& r) {
  // (Delta (x) id) r
  TensorElem out(h.sig, 3);
  for (const auto& [key, c] : r.coeffs()) {
    const auto idx = r.unpack(key);
    for (const auto& [k2, d] : h.delta[idx[0]].coeffs()) {
      const auto uv = h.delta[idx[0]].unpack(k2);
      out.add(uv[0], uv[1], idx[1], c * d);
    }
  }
  return out;
}

TensorElem delta_tensor_right(const HopfData& h, const TensorElem& r) {
  // (id (x) Delta) r
  TensorElem out(h.sig, 3);
  for (const auto& [key, c] : r.coeffs()) {
    const auto idx = r.unpack(key);
    for (const auto& [k2, d] : h.delta[idx[1]].coeffs()) {
      const auto uv = h.delta[idx[1]].unpack(k2);
      out.add(idx[0], uv[0], uv[1], c * d);
    }
  }
  return out;
}

// Gauss-Jordan inverse of a square matrix.
std::optional<ExactMatrix> invert(ExactMatrix m) {
  const std::size_t n = m.rows();
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(piv, c), m(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    const CycNum f = m(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      if (!m(col, c).is_zero()) m(col, c) *= f;
      if (!inv(col, c).is_zero()) inv(col, c) *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const CycNum g = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!m(col, c).is_zero()) m(r, c) -= g * m(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= g * inv(col, c);
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Polynomials of degree <= 2 in the free parameters of the linear stage.

using Mono = std::pair<int, int>;  // (-1,-1) constant, (-1,v) linear, (u,v) u <= v quadratic
using Poly = std::map<Mono, CycNum>;
using Lin = std::map<int, CycNum>;  // key -1 is the constant term

Mono mono_of(int u, int v) {
  if (u > v) std::swap(u, v);
  return {u, v};
}

void add_term(Poly& p, Mono m, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

void add_term(Lin& l, int v, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = l.try_emplace(v, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) l.erase(it);
  }
}

void add_lin(Poly& p, const Lin& l, const CycNum& scale) {
  for (const auto& [v, c] : l) add_term(p, {-1, v}, scale * c);
}

void add_product(Poly& p, const Lin& a, const Lin& b, const CycNum& scale) {
  for (const auto& [u, c] : a) {
    for (const auto& [v, d] : b) add_term(p, mono_of(u, v), scale * c * d);
  }
}

int degree(const Poly& p) {
  int d = 0;
  for (const auto& [m, c] : p) d = std::max(d, (m.first >= 0 ? 1 : 0) + (m.second >= 0 ? 1 : 0));
  return d;
}

std::set<int> variables(const Poly& p) {
  std::set<int> out;
  for (const auto& [m, c] : p) {
    if (m.first >= 0) out.insert(m.first);
    if (m.second >= 0) out.insert(m.second);
  }
  return out;
}

// Replaces t_v by the linear form l (which must not mention v).
Poly substitute(const Poly& p, int v, const Lin& l) {
  Poly out;
  for (const auto& [m, c] : p) {
    const bool first = m.first == v, second = m.second == v;
    if (!first && !second) {
      add_term(out, m, c);
    } else if (first && second) {
      add_product(out, l, l, c);
    } else {
      const int other = first ? m.second : m.first;
      for (const auto& [w, d] : l) add_term(out, mono_of(w, other), c * d);
    }
  }
  return out;
}

Lin substitute(const Lin& p, int v, const Lin& l) {
  auto it = p.find(v);
  if (it == p.end()) return p;
  Lin out = p;
  const CycNum c = it->second;
  out.erase(v);
  for (const auto& [w, d] : l) add_term(out, w, c * d);
  return out;
}

std::string var_name(int v) { return "t" + std::to_string(v); }

std::string poly_string(const Poly& p) {
  std::string out;
  for (const auto& [m, c] : p) {
    std::string mono;
    if (m.first >= 0) mono = var_name(m.first) + "*";
    if (m.second >= 0) mono += var_name(m.second);
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")" + (mono.empty() ? "" : "*" + mono);
  }
  return out.empty() ? "0" : out;
}

std::uint32_t common_conductor(const Poly& p) {
  std::uint32_t n = 1;
  for (const auto& [m, c] : p) n = std::lcm(n, c.conductor());
  return n;
}

struct SearchState {
  std::vector<Poly> eqs;
  std::vector<Lin> r;  // affine forms of the dim^2 coefficients
};

class RootSearch {
 public:
  RootSearch(std::uint64_t bound, std::vector<std::string>& log) : bound_(bound), log_(log) {}

  void run(SearchState s, std::vector<Vec>& leaves) { dfs(std::move(s), leaves); }
  std::uint64_t leaves() const { return leaves_; }

 private:
  void count() {
    if (++nodes_ > bound_) {
      fail(ErrorCode::kResource, "R-matrix enumeration exceeded " + std::to_string(bound_) + " candidates");
    }
  }

  static void apply(SearchState& s, int v, const Lin& l) {
    for (auto& e : s.eqs) e = substitute(e, v, l);
    for (auto& f : s.r) f = substitute(f, v, l);
  }

  void dfs(SearchState s, std::vector<Vec>& leaves) {
    count();
    for (;;) {
      std::vector<Poly> kept;
      for (auto& e : s.eqs) {
        if (e.empty()) continue;
        if (degree(e) == 0) return;  // inconsistent branch
        kept.push_back(std::move(e));
      }
      s.eqs = std::move(kept);
      // Linear equations are eliminated without branching.
      auto lin = std::find_if(s.eqs.begin(), s.eqs.end(), [](const Poly& p) { return degree(p) == 1; });
      if (lin == s.eqs.end()) break;
      const Poly e = *lin;
      int v = -1;
      for (const auto& [m, c] : e) {
        if (m.second >= 0) {
          v = m.second;
          break;
        }
      }
      const CycNum inv = -e.at({-1, v}).inverse();
      Lin l;
      for (const auto& [m, c] : e) {
        if (m.second != v) add_term(l, m.second, c * inv);
      }
      apply(s, v, l);
    }
    if (s.eqs.empty()) {
      Vec out(s.r.size());
      for (std::size_t k = 0; k < s.r.size(); ++k) {
        for (const auto& [v, c] : s.r[k]) {
          if (v >= 0) fail(ErrorCode::kStructure, "R-matrix solution set has a free parameter " + var_name(v));
          out[k] = c;
        }
      }
      ++leaves_;
      leaves.push_back(std::move(out));
      return;
    }
    // A univariate quadratic: branch over its roots.
    for (const Poly& e : s.eqs) {
      const auto vars = variables(e);
      if (vars.size() != 1) continue;
      const int v = *vars.begin();
      auto coef = [&](Mono m) {
        auto it = e.find(m);
        return it == e.end() ? CycNum() : it->second;
      };
      const CycNum a = coef({v, v}), b = coef({-1, v}), c = coef({-1, -1});
      const CycNum disc = b * b - CycNum(4) * a * c;
      const std::uint32_t n0 = std::lcm(common_conductor(e), 8U);
      std::optional<CycNum> root;
      for (std::uint32_t n : {n0, 2 * n0}) {
        if (euler_phi(n) > 16) break;
        root = sqrt_in_field(disc, n);
        if (root) break;
      }
      if (!root) {
        fail(ErrorCode::kUnsupported, "no square root of " + disc.to_string() + " found for " + poly_string(e));
      }
      const CycNum den = (CycNum(2) * a).inverse();
      std::vector<CycNum> roots{(-b + *root) * den};
      if (!root->is_zero()) roots.push_back((-b - *root) * den);
      std::string note = var_name(v) + ": " + poly_string(e) + " = 0 ->";
      for (const auto& x : roots) note += " " + x.to_string();
      log_.push_back(note);
      for (const auto& x : roots) {
        SearchState t = s;
        apply(t, v, Lin{{-1, x}});
        dfs(std::move(t), leaves);
      }
      return;
    }
    // A single product c t_u t_v = 0 splits into t_u = 0 or t_v = 0.
    for (const Poly& e : s.eqs) {
      if (e.size() != 1 || e.begin()->first.first < 0) continue;
      const auto [u, v] = e.begin()->first;
      log_.push_back(var_name(u) + "*" + var_name(v) + " = 0 -> split");
      for (int w : std::set<int>{u, v}) {
        SearchState t = s;
        apply(t, w, Lin{});
        dfs(std::move(t), leaves);
      }
      return;
    }
    fail(ErrorCode::kUnsupported, "R-matrix solver stalled with " + std::to_string(s.eqs.size()) +
                                      " coupled quadratic constraints, first: " + poly_string(s.eqs.front()));
  }

  std::uint64_t bound_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
  std::vector<std::string>& log_;
};

bool is_kp_shape(const HopfData& h) { return h.sig->blocks() == std::vector<int>{1, 1, 1, 1, 2}; }

}  // namespace

const char* provenance_name(RProvenance p) {
  switch (p) {
    case RProvenance::kAnsatzSolved:
      return "ansatz-solved";
    case RProvenance::kUserSupplied:
      return "user-supplied";
    case RProvenance::kPublishedFamily:
      return "published-family";
  }
  return "?";
}

TensorElem leg_embed(const TensorElem& t, const std::string& legs) {
  if (t.arity() != 2) fail(ErrorCode::kDimension, "leg_embed needs a double tensor");
  if (legs != "12" && legs != "13" && legs != "23") fail(ErrorCode::kInvalidArgument, "leg code must be 12, 13 or 23");
  const SigPtr& sig = t.signature();
  const AlgElement one = AlgElement::unit(sig);
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < one.dim(); ++i) {
    if (!one[i].is_zero()) ones.push_back(i);
  }
  TensorElem out(sig, 3);
  for (const auto& [key, c] : t.coeffs()) {
    const auto idx = t.unpack(key);
    for (std::size_t u : ones) {
      const CycNum cu = c * one[u];
      if (legs == "12") out.add(idx[0], idx[1], u, cu);
      else if (legs == "13") out.add(idx[0], u, idx[1], cu);
      else out.add(u, idx[0], idx[1], cu);
    }
  }
  return out;
}

std::optional<TensorElem> tensor_inverse(const TensorElem& t) {
  if (t.arity() != 2) fail(ErrorCode::kDimension, "tensor_inverse needs a double tensor");
  const SigPtr& sig = t.signature();
  const auto& blocks = sig->blocks();
  TensorElem out(sig, 2);
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::size_t na = blocks[a], nb = blocks[b], n = na * nb;
      ExactMatrix m(n, n);
      for (std::size_t r1 = 0; r1 < na; ++r1)
        for (std::size_t c1 = 0; c1 < na; ++c1)
          for (std::size_t r2 = 0; r2 < nb; ++r2)
            for (std::size_t c2 = 0; c2 < nb; ++c2) {
              m(r1 * nb + r2, c1 * nb + c2) = t.get(sig->index(a, r1, c1), sig->index(b, r2, c2));
            }
      auto inv = invert(m);
      if (!inv) return std::nullopt;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          const CycNum& v = (*inv)(r, c);
          if (!v.is_zero()) out.add(sig->index(a, r / nb, c / nb), sig->index(b, r % nb, c % nb), v);
        }
    }
  }
  return out;
}

MinimalSubalgebra minimal_subalgebra(const HopfData& h, const TensorElem& r) {
  require_same(h.sig, r.signature(), "minimal_subalgebra");
  const std::size_t d = h.dim();
  std::vector<Vec> gens{h.unit.coords()};
  for (std::size_t j = 0; j < d; ++j) {
    Vec left = zero_vec(d), right = zero_vec(d);
    for (std::size_t i = 0; i < d; ++i) {
      left[i] = r.get(i, j);   // (id (x) b_j^*) R
      right[i] = r.get(j, i);  // (b_j^* (x) id) R
    }
    gens.push_back(std::move(left));
    gens.push_back(std::move(right));
  }
  Subspace s = span(d, gens);
  for (;;) {
    std::vector<Vec> all = s.basis();
    std::vector<AlgElement> b;
    for (const Vec& v : s.basis()) b.emplace_back(h.sig, v);
    for (const auto& x : b)
      for (const auto& y : b) all.push_back((x * y).coords());
    Subspace next = span(d, all);
    if (next.dim() == s.dim()) break;
    s = std::move(next);
  }
  MinimalSubalgebra out;
  out.subspace = s;
  out.delta_closed = true;
  out.antipode_closed = true;
  out.star_closed = true;
  for (const Vec& v : s.basis()) {
    const AlgElement x(h.sig, v);
    out.antipode_closed = out.antipode_closed && s.contains(antipode_of(h, x).coords());
    out.star_closed = out.star_closed && s.contains(x.star().coords());
    const TensorElem dx = delta_of(h, x);
    std::map<std::size_t, Vec> rows, cols;
    for (const auto& [key, c] : dx.coeffs()) {
      const auto idx = dx.unpack(key);
      auto& row = rows[idx[0]];
      if (row.empty()) row = zero_vec(d);
      row[idx[1]] += c;
      auto& col = cols[idx[1]];
      if (col.empty()) col = zero_vec(d);
      col[idx[0]] += c;
    }
    for (const auto* m : {&rows, &cols}) {
      for (const auto& [k, vec] : *m) out.delta_closed = out.delta_closed && s.contains(vec);
    }
  }
  return out;
}

bool yang_baxter(const TensorElem& r) {
  const TensorElem r12 = leg_embed(r, "12"), r13 = leg_embed(r, "13"), r23 = leg_embed(r, "23");
  return tensor_mul(tensor_mul(r12, r13), r23) == tensor_mul(tensor_mul(r23, r13), r12);
}

RReport verify_rmatrix(const HopfData& h, const RCandidate& cand) {
  const TensorElem& r = cand.tensor;
  require_same(h.sig, r.signature(), "verify_rmatrix");
  if (r.arity() != 2) fail(ErrorCode::kDimension, "an R-matrix is a double tensor");
  RReport rep;
  const TensorElem one = TensorElem::unit(h.sig, 2);

  rep.inverse = tensor_inverse(r);
  if (rep.inverse) {
    const bool right = tensor_mul(r, *rep.inverse) == one;
    const bool left = tensor_mul(*rep.inverse, r) == one;
    rep.invertible = right && left;
  }
  if (!rep.invertible) {
    rep.inverse.reset();
    rep.witnesses["invertible"] = "R (x) A block is singular";
  }

  rep.intertwines = true;
  for (std::size_t i = 0; i < h.dim() && rep.intertwines; ++i) {
    const AlgElement x = h.basis(i);
    if (auto diff = tensor_diff(tensor_mul(r, delta_of(h, x)), tensor_mul(delta_op_of(h, x), r))) {
      rep.intertwines = false;
      rep.witnesses["intertwines"] = h.sig->name(i) + ": " + *diff;
    }
  }

  const TensorElem r12 = leg_embed(r, "12"), r13 = leg_embed(r, "13"), r23 = leg_embed(r, "23");
  if (auto diff = tensor_diff(delta_tensor_left(h, r), tensor_mul(r13, r23))) {
    rep.witnesses["hexagon1"] = *diff;
  } else {
    rep.hexagon1 = true;
  }
  if (auto diff = tensor_diff(delta_tensor_right(h, r), tensor_mul(r13, r12))) {
    rep.witnesses["hexagon2"] = *diff;
  } else {
    rep.hexagon2 = true;
  }

  const Functional eps = counit_functional(h);
  const AlgElement left = apply_left(eps, r), right = apply_right(r, eps);
  rep.counit_normalized = left == h.unit && right == h.unit;
  if (!rep.counit_normalized) {
    rep.witnesses["counit_normalized"] = "(eps (x) id)R = " + left.to_string() + ", (id (x) eps)R = " + right.to_string();
  }

  if (auto diff = tensor_diff(tensor_mul(r, tensor_star(r)), one)) {
    rep.witnesses["unitary"] = *diff;
  } else {
    rep.unitary = true;
  }
  rep.yang_baxter = tensor_mul(tensor_mul(r12, r13), r23) == tensor_mul(tensor_mul(r23, r13), r12);

  const MinimalSubalgebra ar = minimal_subalgebra(h, r);
  rep.minimal_dim = ar.subspace.dim();
  rep.minimal = rep.minimal_dim == h.dim();
  rep.minimal_is_hopf = ar.delta_closed && ar.antipode_closed;
  return rep;
}

// ---------------------------------------------------------------------------
// Kac-Paljutkin reduced form

std::array<std::array<CycNum, 4>, 4> kp_r_a_matrix() {
  const std::array<std::array<long, 4>, 4> a{{{1, 1, 1, 1}, {1, -1, -1, 1}, {1, -1, -1, 1}, {1, 1, 1, 1}}};
  std::array<std::array<CycNum, 4>, 4> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = CycNum(a[i][j]);
  return out;
}

TensorElem kp_r_from_params(const HopfData& kp, const KpRParams& p) {
  if (!is_kp_shape(kp)) fail(ErrorCode::kUnsupported, "not the Kac-Paljutkin algebra shape");
  TensorElem r(kp.sig, 2);
  const std::array<std::size_t, 4> e{kE1, kE2, kE3, kE4};
  // e_1 and e_4 pair with a11 + a22, e_2 and e_3 with a11 - a22.
  const std::array<long, 4> s22{1, -1, -1, 1};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) r.add(e[i], e[j], p.a[i][j]);
    r.add(e[i], kA11, p.b[i]);
    r.add(e[i], kA22, CycNum(s22[i]) * p.b[i]);
    r.add(kA11, e[i], p.c[i]);
    r.add(kA22, e[i], CycNum(s22[i]) * p.c[i]);
  }
  r.add(kA11, kA11, p.d[0]);
  r.add(kA11, kA22, p.d[1]);
  r.add(kA12, kA12, p.d[2]);
  r.add(kA12, kA21, p.d[3]);
  r.add(kA21, kA12, p.d[3]);
  r.add(kA21, kA21, p.d[2]);
  r.add(kA22, kA11, -p.d[1]);
  r.add(kA22, kA22, p.d[0]);
  return r;
}

std::optional<KpRParams> kp_r_params(const HopfData& kp, const TensorElem& r) {
  if (!is_kp_shape(kp)) fail(ErrorCode::kUnsupported, "not the Kac-Paljutkin algebra shape");
  KpRParams p;
  const std::array<std::size_t, 4> e{kE1, kE2, kE3, kE4};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) p.a[i][j] = r.get(e[i], e[j]);
    p.b[i] = r.get(e[i], kA11);
    p.c[i] = r.get(kA11, e[i]);
  }
  p.d = {r.get(kA11, kA11), r.get(kA11, kA22), r.get(kA12, kA12), r.get(kA12, kA21)};
  if (!(kp_r_from_params(kp, p) == r)) return std::nullopt;
  return p;
}

std::vector<KpFamily> kp_published_families(const CycNum& case4_lambda_square) {
  const auto a = kp_r_a_matrix();
  auto vec = [](long w, long x, long y, long z) { return std::array<CycNum, 4>{CycNum(w), CycNum(x), CycNum(y), CycNum(z)}; };
  const CycNum i = CycNum::root_of_unity(4, 1);
  std::vector<KpFamily> out;
  for (long s : {1L, -1L}) {
    KpFamily f{1, std::string("case1(") + (s > 0 ? "+" : "-") + ")", {a, vec(1, -1, -1, 1), vec(1, 1, 1, 1), vec(s, s, 0, 0)}};
    out.push_back(f);
  }
  for (long s : {1L, -1L}) {
    KpFamily f{2, std::string("case2(") + (s > 0 ? "+" : "-") + ")", {a, vec(1, 1, 1, 1), vec(1, -1, -1, 1), vec(s, -s, 0, 0)}};
    out.push_back(f);
  }
  const auto lambdas = [](const CycNum& sq) {
    const auto root = sqrt_in_field(sq, std::lcm(sq.conductor(), 8U));
    if (!root) fail(ErrorCode::kStructure, "lambda is outside Q(zeta_8)");
    return std::vector<CycNum>{*root, -*root};
  };
  for (const CycNum& l : lambdas(i)) {
    out.push_back({3, "case3(lambda=" + l.to_string() + ")",
                   {a, vec(1, -1, 1, -1), vec(1, 1, -1, -1), {CycNum(), CycNum(), l, -i * l}}});
  }
  for (const CycNum& l : lambdas(case4_lambda_square)) {
    out.push_back({4, "case4(lambda=" + l.to_string() + ")",
                   {a, vec(1, 1, -1, -1), vec(1, -1, 1, -1), {CycNum(), CycNum(), l, i * l}}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Solver

RSolveResult solve_rmatrices(const HopfData& h, const RSolveOptions& options) {
  const SigPtr& sig = h.sig;
  const std::size_t d = h.dim();
  const std::size_t unknowns = d * d;
  RSolveResult res;
  res.unknowns = unknowns;

  // Linear stage: one row per coefficient of R Delta(x) - Delta^op(x) R, and
  // the counit normalization (eps (x) id)R = 1 = (id (x) eps)R.
  EchelonBuilder rows(unknowns + 1);
  std::vector<TensorElem> dx(d), dox(d);
  for (std::size_t x = 0; x < d; ++x) {
    dx[x] = h.delta[x];
    dox[x] = flip(h.delta[x]);
  }
  for (std::size_t x = 0; x < d; ++x) {
    std::map<TensorElem::Key, Vec> eq;
    for (std::size_t k = 0; k < unknowns; ++k) {
      TensorElem unit_k(sig, 2);
      unit_k.add(k / d, k % d, CycNum(1));
      const TensorElem t = tensor_mul(unit_k, dx[x]) - tensor_mul(dox[x], unit_k);
      for (const auto& [key, c] : t.coeffs()) {
        auto& row = eq[key];
        if (row.empty()) row = zero_vec(unknowns + 1);
        row[k] += c;
      }
    }
    for (auto& [key, row] : eq) rows.insert(std::move(row));
  }
  for (std::size_t j = 0; j < d; ++j) {
    Vec left = zero_vec(unknowns + 1), right = zero_vec(unknowns + 1);
    for (std::size_t i = 0; i < d; ++i) {
      left[i * d + j] = h.counit[i];
      right[j * d + i] = h.counit[i];
    }
    left[unknowns] = -h.unit[j];
    right[unknowns] = -h.unit[j];
    rows.insert(std::move(left));
    rows.insert(std::move(right));
  }
  // The last column holds -rhs; split it back off.
  ExactMatrix a(rows.rank(), unknowns);
  Vec b(rows.rank());
  for (std::size_t r = 0; r < rows.rank(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) a(r, c) = rows.rows()[r][c];
    b[r] = -rows.rows()[r][unknowns];
  }
  const auto lin = solve_linear(a, b);
  if (!lin) {
    res.log.push_back("linear stage is inconsistent");
    return res;
  }
  res.linear_rank = unknowns - lin->nullspace.dim();
  res.free_parameters = lin->nullspace.dim();

  SearchState state;
  state.r.resize(unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    add_term(state.r[k], -1, lin->particular[k]);
    for (std::size_t m = 0; m < lin->nullspace.dim(); ++m) add_term(state.r[k], static_cast<int>(m), lin->nullspace.basis()[m][k]);
  }

  // Quadratic stage: coefficients of both hexagon identities.
  auto key3 = [d](std::size_t i, std::size_t j, std::size_t k) { return (static_cast<TensorElem::Key>(i) * d + j) * d + k; };
  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < unknowns; ++k) {
    if (!state.r[k].empty()) live.push_back(k);
  }
  const CycNum minus_one(-1);
  // (Delta (x) id)R - R13 R23
  std::map<TensorElem::Key, Poly> hex1, hex2;
  for (std::size_t k : live) {
    const std::size_t i = k / d, j = k % d;
    for (const auto& [key, c] : h.delta[i].coeffs()) {
      const auto uv = h.delta[i].unpack(key);
      add_lin(hex1[key3(uv[0], uv[1], j)], state.r[k], c);
    }
    for (const auto& [key, c] : h.delta[j].coeffs()) {
      const auto uv = h.delta[j].unpack(key);
      add_lin(hex2[key3(i, uv[0], uv[1])], state.r[k], c);
    }
  }
  for (std::size_t k1 : live) {
    const std::size_t i = k1 / d, j = k1 % d;
    for (std::size_t k2 : live) {
      const std::size_t k = k2 / d, l = k2 % d;
      // R13 R23 = sum r_ij r_kl  b_i (x) b_k (x) b_j b_l
      if (auto m = sig->basis_product(j, l)) add_product(hex1[key3(i, k, *m)], state.r[k1], state.r[k2], minus_one);
      // R13 R12 = sum r_ij r_kl  b_i b_k (x) b_l (x) b_j
      if (auto m = sig->basis_product(i, k)) add_product(hex2[key3(*m, l, j)], state.r[k1], state.r[k2], minus_one);
    }
  }
  for (auto* m : {&hex1, &hex2}) {
    for (auto& [key, p] : *m) {
      if (!p.empty()) state.eqs.push_back(std::move(p));
    }
  }
  res.quadratic_equations = state.eqs.size();

  std::vector<Vec> leaves;
  RootSearch search(options.max_candidates, res.log);
  search.run(std::move(state), leaves);
  res.candidates = search.leaves();

  for (const Vec& v : leaves) {
    RCandidate c;
    c.tensor = TensorElem(sig, 2);
    for (std::size_t k = 0; k < unknowns; ++k) {
      if (!v[k].is_zero()) c.tensor.add(k / d, k % d, v[k]);
    }
    c.provenance = RProvenance::kAnsatzSolved;
    const RReport rep = verify_rmatrix(h, c);
    if (rep.quasitriangular() && rep.counit_normalized) {
      c.label = "solution" + std::to_string(res.solutions.size() + 1);
      res.solutions.push_back(std::move(c));
    } else {
      res.log.push_back("candidate rejected by verification");
    }
  }
  return res;
}

RSolveResult solve_kp_rmatrices(const HopfData& h, const RSolveOptions& options) {
  if (!is_kp_shape(h)) fail(ErrorCode::kUnsupported, "solve_kp_rmatrices needs the Kac-Paljutkin algebra (blocks 1,1,1,1,2)");
  RSolveResult res = solve_rmatrices(h, options);
  // Label each solution by the published family it coincides with.
  std::vector<KpFamily> fams = kp_published_families();
  for (const auto& f : kp_published_families(-CycNum::root_of_unity(4, 1))) {
    if (f.case_index == 4) fams.push_back(f);
  }
  std::vector<std::pair<std::size_t, RCandidate>> keyed;
  for (auto& s : res.solutions) {
    std::size_t rank = fams.size();
    for (std::size_t f = 0; f < fams.size(); ++f) {
      if (kp_r_from_params(h, fams[f].params) == s.tensor) {
        s.label = fams[f].label;
        rank = f;
        break;
      }
    }
    keyed.emplace_back(rank, std::move(s));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  res.solutions.clear();
  for (auto& [rank, s] : keyed) res.solutions.push_back(std::move(s));
  return res;
}

}  // namespace fqg
