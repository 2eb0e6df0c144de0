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

#include "fqg/models.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "fqg/error.hpp"

namespace fqg {

namespace {

int mod(long a, int k) {
  const long r = a % k;
  return static_cast<int>(r < 0 ? r + k : r);
}

CycNum q(long num, long den = 1) { return CycNum(Rational(num, den)); }

const CycNum& imag_unit() {
  static const CycNum i = CycNum::root_of_unity(4, 1);
  return i;
}

}  // namespace

// ---------------------------------------------------------------------------
// Kac-Paljutkin

HopfData kac_paljutkin() {
  auto sig = std::make_shared<const AlgSignature>(std::vector<int>{1, 1, 1, 1, 2},
                                                  std::vector<std::string>{"e1", "e2", "e3", "e4", "a11", "a12",
                                                                           "a21", "a22"});
  HopfData h = make_hopf_shell(sig, "kac-paljutkin");
  const CycNum one(1L), half = q(1, 2), i = imag_unit();
  auto& d = h.delta;
  auto sym = [&](std::size_t t, std::size_t x, std::size_t y, const CycNum& c, const CycNum& c_flip) {
    d[t].add(x, y, c);
    d[t].add(y, x, c_flip);
  };

  d[kE1].add(kE1, kE1, one);
  d[kE1].add(kE2, kE2, one);
  d[kE1].add(kE3, kE3, one);
  d[kE1].add(kE4, kE4, one);
  d[kE1].add(kA11, kA11, half);
  d[kE1].add(kA12, kA12, half);
  d[kE1].add(kA21, kA21, half);
  d[kE1].add(kA22, kA22, half);

  sym(kE2, kE1, kE2, one, one);
  sym(kE2, kE3, kE4, one, one);
  sym(kE2, kA11, kA22, half, half);
  sym(kE2, kA12, kA21, -half * i, half * i);

  sym(kE3, kE1, kE3, one, one);
  sym(kE3, kE2, kE4, one, one);
  sym(kE3, kA11, kA22, half, half);
  sym(kE3, kA12, kA21, half * i, -half * i);

  sym(kE4, kE1, kE4, one, one);
  sym(kE4, kE2, kE3, one, one);
  d[kE4].add(kA11, kA11, half);
  d[kE4].add(kA22, kA22, half);
  d[kE4].add(kA12, kA12, -half);
  d[kE4].add(kA21, kA21, -half);

  sym(kA11, kE1, kA11, one, one);
  sym(kA11, kE2, kA22, one, one);
  sym(kA11, kE3, kA22, one, one);
  sym(kA11, kE4, kA11, one, one);

  sym(kA12, kE1, kA12, one, one);
  sym(kA12, kE2, kA21, i, -i);
  sym(kA12, kE3, kA21, -i, i);
  sym(kA12, kE4, kA12, -one, -one);

  sym(kA21, kE1, kA21, one, one);
  sym(kA21, kE2, kA12, -i, i);
  sym(kA21, kE3, kA12, i, -i);
  sym(kA21, kE4, kA21, -one, -one);

  sym(kA22, kE1, kA22, one, one);
  sym(kA22, kE2, kA11, one, one);
  sym(kA22, kE3, kA11, one, one);
  sym(kA22, kE4, kA22, one, one);

  // The matrix block of the counit is forced to vanish by the counit axiom.
  h.counit[kE1] = one;
  for (std::size_t e : {kE1, kE2, kE3, kE4}) h.antipode[e] = AlgElement::basis(sig, e);
  h.antipode[kA11] = AlgElement::basis(sig, kA11);
  h.antipode[kA12] = AlgElement::basis(sig, kA21);
  h.antipode[kA21] = AlgElement::basis(sig, kA12);
  h.antipode[kA22] = AlgElement::basis(sig, kA22);

  Functional haar(sig);
  for (std::size_t e : {kE1, kE2, kE3, kE4}) haar.values()[e] = q(1, 8);
  haar.values()[kA11] = q(1, 4);
  haar.values()[kA22] = q(1, 4);
  h.haar = haar;
  return h;
}

// ---------------------------------------------------------------------------
// Sekine

std::size_t sekine_d(int k, int i, int j) {
  return static_cast<std::size_t>(mod(i, k)) * k + static_cast<std::size_t>(mod(j, k));
}

std::size_t sekine_e(int k, int i, int j) {
  return static_cast<std::size_t>(k) * k + static_cast<std::size_t>(mod(i, k)) * k + static_cast<std::size_t>(mod(j, k));
}

namespace {

// literal_leg: second leg of the matrix part of Delta(d_ij) taken verbatim as
// e_{m+j, m+j}; otherwise e_{m+j, n+j}.
HopfData build_sekine(int k, bool literal_leg) {
  std::vector<int> blocks(static_cast<std::size_t>(k) * k, 1);
  blocks.push_back(k);
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) names.push_back("d(" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) names.push_back("e(" + std::to_string(i) + "," + std::to_string(j) + ")");
  auto sig = std::make_shared<const AlgSignature>(blocks, names);
  HopfData h = make_hopf_shell(sig, "sekine-" + std::to_string(k));
  const auto ku = static_cast<std::uint32_t>(k);
  std::vector<CycNum> eta(ku);
  for (std::uint32_t e = 0; e < ku; ++e) eta[e] = CycNum::root_of_unity(ku, e);
  auto eta_pow = [&](long e) -> const CycNum& { return eta[static_cast<std::size_t>(mod(e, k))]; };
  const CycNum inv_k = q(1, k);
  const CycNum one(1L);

  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      TensorElem& dd = h.delta[sekine_d(k, i, j)];
      for (int m = 0; m < k; ++m) {
        for (int n = 0; n < k; ++n) {
          dd.add(sekine_d(k, m, n), sekine_d(k, i - m, j - n), one);
          const std::size_t second = literal_leg ? sekine_e(k, m + j, m + j) : sekine_e(k, m + j, n + j);
          dd.add(sekine_e(k, m, n), second, inv_k * eta_pow(static_cast<long>(i) * (m - n)));
        }
      }
      TensorElem& de = h.delta[sekine_e(k, i, j)];
      for (int m = 0; m < k; ++m) {
        for (int n = 0; n < k; ++n) {
          de.add(sekine_d(k, -m, -n), sekine_e(k, i - n, j - n), eta_pow(static_cast<long>(m) * (i - j)));
          de.add(sekine_e(k, i - n, j - n), sekine_d(k, m, n), eta_pow(static_cast<long>(m) * (j - i)));
        }
      }
      h.counit[sekine_d(k, i, j)] = (i == 0 && j == 0) ? one : CycNum();
      h.antipode[sekine_d(k, i, j)] = AlgElement::basis(sig, sekine_d(k, -i, -j));
      h.antipode[sekine_e(k, i, j)] = AlgElement::basis(sig, sekine_e(k, j, i));
    }
  }

  Functional haar(sig);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) haar.values()[sekine_d(k, i, j)] = q(1, 2L * k * k);
    haar.values()[sekine_e(k, i, i)] = q(1, 2L * k);
  }
  h.haar = haar;
  return h;
}

}  // namespace

HopfData sekine(int k) {
  if (k < 2 || k > 64) fail(ErrorCode::kInvalidArgument, "sekine: k must lie in [2, 64]");
  HopfData literal = build_sekine(k, true);
  const AxiomReport lit = verify_hopf(literal, VerifyOptions{true});
  if (lit.all_passed()) {
    literal.notes.push_back("Delta(d_ij) built with the printed second leg e_{m+j,m+j}; all axioms pass");
    if (k == 2) literal.notes.push_back("k = 2 is outside the published range k >= 3");
    return literal;
  }
  HopfData corrected = build_sekine(k, false);
  const AxiomReport cor = verify_hopf(corrected);
  if (!cor.all_passed()) {
    fail(ErrorCode::kStructure, "sekine(" + std::to_string(k) + "): axiom failure: " + *cor.first_failure());
  }
  corrected.notes.push_back("printed second leg e_{m+j,m+j} in Delta(d_ij) fails " + *lit.first_failure() +
                            "; using e_{m+j,n+j}, which passes all axioms");
  if (k == 2) corrected.notes.push_back("k = 2 is outside the published range k >= 3");
  return corrected;
}

// ---------------------------------------------------------------------------
// Finite groups

FiniteGroupTable::FiniteGroupTable(std::string name, std::vector<std::vector<int>> mul)
    : name_(std::move(name)), mul_(std::move(mul)) {
  const int n = static_cast<int>(mul_.size());
  if (n == 0) fail(ErrorCode::kInvalidArgument, "group table is empty");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::kInvalidArgument, "group table is not square");
    for (int x : row) {
      if (x < 0 || x >= n) fail(ErrorCode::kInvalidArgument, "group table entry out of range");
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul_[e][a] == a && mul_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) fail(ErrorCode::kInvalidArgument, "group table has no identity");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul_[a][b] == identity_ && mul_[b][a] == identity_) inv_[a] = b;
    }
    if (inv_[a] < 0) fail(ErrorCode::kInvalidArgument, "group table element without inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) fail(ErrorCode::kInvalidArgument, "group table is not associative");
      }
}

FiniteGroupTable FiniteGroupTable::cyclic_product(const std::vector<int>& orders) {
  if (orders.empty()) fail(ErrorCode::kInvalidArgument, "empty cyclic product");
  int n = 1;
  std::string name;
  for (int o : orders) {
    if (o < 1 || o > 64) fail(ErrorCode::kInvalidArgument, "cyclic factor order out of range");
    n *= o;
    if (n > 512) fail(ErrorCode::kInvalidArgument, "group order too large");
    name += (name.empty() ? "z" : "xz") + std::to_string(o);
  }
  auto digits = [&](int a) {
    std::vector<int> d(orders.size());
    for (std::size_t t = orders.size(); t-- > 0;) {
      d[t] = a % orders[t];
      a /= orders[t];
    }
    return d;
  };
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    const auto da = digits(a);
    for (int b = 0; b < n; ++b) {
      const auto db = digits(b);
      int c = 0;
      for (std::size_t t = 0; t < orders.size(); ++t) c = c * orders[t] + (da[t] + db[t]) % orders[t];
      mul[a][b] = c;
    }
  }
  FiniteGroupTable g(name, std::move(mul));
  g.factors_ = orders;
  return g;
}

FiniteGroupTable FiniteGroupTable::from_name(const std::string& name) {
  if (name == "s3") {
    // Permutations of {0,1,2} in lexicographic order; (a*b)(x) = a(b(x)).
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<int>> mul(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) {
        std::array<int, 3> c{};
        for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
        mul[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    }
    return FiniteGroupTable("s3", std::move(mul));
  }
  std::vector<int> orders;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.size() < 2 || part[0] != 'z' ||
        !std::all_of(part.begin() + 1, part.end(), [](unsigned char c) { return std::isdigit(c); })) {
      fail(ErrorCode::kInvalidArgument, "unknown group '" + name + "' (expected z<n>[xz<m>...] or s3)");
    }
    orders.push_back(std::stoi(part.substr(1)));
  }
  if (orders.empty()) fail(ErrorCode::kInvalidArgument, "unknown group '" + name + "'");
  return cyclic_product(orders);
}

bool FiniteGroupTable::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b) {
      if (mul_[a][b] != mul_[b][a]) return false;
    }
  return true;
}

std::string FiniteGroupTable::element_name(int a) const {
  if (factors_.size() <= 1) return std::to_string(a);
  std::vector<int> d(factors_.size());
  for (std::size_t t = factors_.size(); t-- > 0;) {
    d[t] = a % factors_[t];
    a /= factors_[t];
  }
  std::string out = "(";
  for (std::size_t t = 0; t < d.size(); ++t) out += (t ? "," : "") + std::to_string(d[t]);
  return out + ")";
}

HopfData function_algebra(const FiniteGroupTable& g) {
  const int n = g.order();
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back("delta_" + g.element_name(a));
  auto sig = std::make_shared<const AlgSignature>(std::vector<int>(n, 1), names);
  HopfData h = make_hopf_shell(sig, "C(" + g.name() + ")");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) h.delta[g.mul(x, y)].add(x, y, CycNum(1L));
  h.counit[g.identity()] = CycNum(1L);
  for (int a = 0; a < n; ++a) h.antipode[a] = AlgElement::basis(sig, g.inverse(a));
  Functional haar(sig, Vec(n, q(1, n)));
  h.haar = haar;
  return h;
}

namespace {

// chi_a(g) for a, g given as element indices of a cyclic product.
CycNum character(const FiniteGroupTable& g, int a, int x) {
  const auto& f = g.cyclic_factors();
  std::uint32_t n = 1;
  for (int o : f) n = std::lcm(n, static_cast<std::uint32_t>(o));
  long e = 0;
  for (std::size_t t = f.size(); t-- > 0;) {
    e += static_cast<long>(a % f[t]) * (x % f[t]) * static_cast<long>(n / f[t]);
    a /= f[t];
    x /= f[t];
  }
  return CycNum::root_of_unity(n, e);
}

}  // namespace

AlgElement group_element(const HopfData& cg, const FiniteGroupTable& g, int element) {
  AlgElement out(cg.sig);
  for (int a = 0; a < g.order(); ++a) out[a] = character(g, a, element);
  return out;
}

HopfData group_algebra(const FiniteGroupTable& g) {
  if (!g.is_abelian()) fail(ErrorCode::kUnsupported, "group_algebra: nonabelian group '" + g.name() + "' is not supported");
  if (g.cyclic_factors().empty()) {
    fail(ErrorCode::kUnsupported, "group_algebra: characters are only available for products of cyclic groups");
  }
  const int n = g.order();
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) names.push_back("p_chi" + g.element_name(a));
  auto sig = std::make_shared<const AlgSignature>(std::vector<int>(n, 1), names);
  HopfData h = make_hopf_shell(sig, "C[" + g.name() + "]");
  std::vector<AlgElement> elems;
  for (int x = 0; x < n; ++x) elems.push_back(group_element(h, g, x));
  // p_chi = |G|^-1 sum_g conj(chi(g)) g, with Delta(g) = g (x) g,
  // eps(g) = 1 and S(g) = g^-1.
  const CycNum inv_n = q(1, n);
  for (int a = 0; a < n; ++a) {
    TensorElem d(sig, 2);
    CycNum eps;
    AlgElement s(sig);
    for (int x = 0; x < n; ++x) {
      const CycNum c = inv_n * character(g, a, x).conj();
      d += c * TensorElem::pure(elems[x], elems[x]);
      eps += c;
      s += c * elems[g.inverse(x)];
    }
    h.delta[a] = d;
    h.counit[a] = eps;
    h.antipode[a] = s;
  }
  // h(g) = [g = e] gives h(p_chi) = 1/|G|.
  h.haar = Functional(sig, Vec(n, inv_n));
  return h;
}

Functional dual_basis(const SigPtr& sig, std::size_t i) {
  Functional f(sig);
  f.values().at(i) = CycNum(1L);
  return f;
}

// ---------------------------------------------------------------------------
// Named objects

KpNamed kp_named_objects(const HopfData& kp) {
  const auto& sig = kp.sig;
  if (sig->dim() != 8) fail(ErrorCode::kDimension, "kp_named_objects needs the Kac-Paljutkin algebra");
  auto fn = [&](std::initializer_list<std::pair<std::size_t, CycNum>> vals) {
    Functional f(sig);
    for (const auto& [i, c] : vals) f.values()[i] = c;
    return f;
  };
  auto el = [&](std::initializer_list<std::pair<std::size_t, CycNum>> vals) {
    AlgElement x(sig);
    for (const auto& [i, c] : vals) x[i] += c;
    return x;
  };
  const CycNum one(1L), half = q(1, 2), quarter = q(1, 4), i = imag_unit();
  KpNamed out;
  out.rho.push_back(counit_functional(kp));
  out.rho.push_back(fn({{kE1, half}, {kE2, half}}));
  out.rho.push_back(fn({{kE1, half}, {kE3, half}}));
  out.rho.push_back(fn({{kE1, half}, {kE4, half}}));
  out.rho.push_back(fn({{kE1, quarter}, {kE2, quarter}, {kE3, quarter}, {kE4, quarter}}));
  out.rho.push_back(fn({{kE1, quarter}, {kE4, quarter}, {kA11, half}}));
  out.rho.push_back(fn({{kE1, quarter}, {kE4, quarter}, {kA22, half}}));
  out.rho.push_back(fn({{kE1, q(1, 8)}, {kE2, q(1, 8)}, {kE3, q(1, 8)}, {kE4, q(1, 8)}, {kA11, quarter}, {kA22, quarter}}));

  out.p.push_back(el({{kE1, one}}));
  out.p.push_back(el({{kE1, one}, {kE2, one}}));
  out.p.push_back(el({{kE1, one}, {kE3, one}}));
  out.p.push_back(el({{kE1, one}, {kE4, one}}));
  out.p.push_back(el({{kE1, one}, {kE2, one}, {kE3, one}, {kE4, one}}));
  out.p.push_back(el({{kE1, one}, {kE4, one}, {kA11, one}}));
  out.p.push_back(el({{kE1, one}, {kE4, one}, {kA22, one}}));
  out.p.push_back(kp.unit);

  auto sp = [&](std::initializer_list<AlgElement> xs) {
    std::vector<Vec> v;
    for (const auto& x : xs) v.push_back(x.coords());
    return span(8, v);
  };
  std::vector<Vec> all;
  for (std::size_t b = 0; b < 8; ++b) all.push_back(AlgElement::basis(sig, b).coords());
  out.listed_L.push_back(span(8, all));
  out.listed_L.push_back(sp({el({{kE1, one}, {kE2, one}}), el({{kE3, one}, {kE4, one}}),
                             el({{kA11, one}, {kA22, one}}), el({{kA12, one}, {kA21, -i}})}));
  // Printed with e2+e4 as the second vector.
  out.listed_L.push_back(sp({el({{kE1, one}, {kE4, one}}), el({{kE2, one}, {kE4, one}}),
                             el({{kA11, one}, {kA22, one}}), el({{kA12, one}, {kA21, i}})}));
  out.listed_L.push_back(sp({el({{kE1, one}, {kE4, one}}), el({{kE2, one}, {kE3, one}}), el({{kA11, one}}),
                             el({{kA22, one}})}));
  out.listed_L.push_back(sp({el({{kE1, one}, {kE2, one}, {kE3, one}, {kE4, one}}), el({{kA11, one}, {kA22, one}})}));
  out.listed_L.push_back(sp({el({{kE1, one}, {kE4, one}, {kA11, one}}), el({{kE2, one}, {kE3, one}, {kA22, one}})}));
  out.listed_L.push_back(sp({el({{kE1, one}, {kE4, one}, {kA22, one}}), el({{kE2, one}, {kE3, one}, {kA11, one}})}));
  out.listed_L.push_back(sp({kp.unit}));
  return out;
}

SekineNamed sekine_named_objects(const HopfData& a, int k) {
  if (k < 2) fail(ErrorCode::kInvalidArgument, "sekine_named_objects: k must be at least 2");
  if (a.dim() != 2ULL * k * k) fail(ErrorCode::kDimension, "sekine_named_objects: algebra does not match k");
  const auto& sig = a.sig;
  const std::size_t dim = a.dim();
  SekineNamed out;
  out.k = k;
  for (int i = 1; i < k; ++i) {
    std::vector<std::pair<int, int>> g;
    for (int j = 0; j < k; ++j) g.push_back({j, mod(static_cast<long>(i) * j, k)});
    out.gamma.push_back(g);
  }
  {
    std::vector<std::pair<int, int>> g;
    for (int r = 0; r < k; ++r)
      for (int s = 0; s < k; ++s) g.push_back({r, s});
    out.gamma.push_back(g);
  }
  const auto ku = static_cast<std::uint32_t>(k);
  for (int i = 1; i <= k; ++i) {
    const auto& g = out.gamma[i - 1];
    Functional h(sig);
    AlgElement p(sig);
    const CycNum w = q(1, static_cast<long>(g.size()));
    for (const auto& [r, s] : g) {
      h.values()[sekine_d(k, r, s)] = w;
      p[sekine_d(k, r, s)] = CycNum(1L);
    }
    out.h.push_back(h);
    out.p.push_back(p);
    std::vector<Vec> vecs;
    if (i < k) {
      for (int pp = 0; pp < k; ++pp) {
        for (int qq = 0; qq < k; ++qq) {
          Vec dv(dim), ev(dim);
          for (const auto& [r, s] : g) {
            dv[sekine_d(k, pp - r, qq - s)] += CycNum(1L);
            ev[sekine_e(k, pp - s, qq - s)] += CycNum::root_of_unity(ku, static_cast<long>(r) * (qq - pp));
          }
          vecs.push_back(dv);
          vecs.push_back(ev);
        }
      }
    } else {
      Vec dv(dim), ev(dim);
      for (int r = 0; r < k; ++r) {
        for (int s = 0; s < k; ++s) dv[sekine_d(k, r, s)] = CycNum(1L);
        ev[sekine_e(k, r, r)] = CycNum(1L);
      }
      vecs.push_back(dv);
      vecs.push_back(ev);
    }
    out.listed_L.push_back(span(dim, vecs));
  }
  out.d00 = AlgElement::basis(sig, sekine_d(k, 0, 0));
  return out;
}

}  // namespace fqg
