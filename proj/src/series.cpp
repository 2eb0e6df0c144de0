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

#include "fqg/series.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "fqg/error.hpp"
#include "parallel.hpp"

namespace fqg {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::string label_of(const Coideal& c, std::size_t fallback) {
  return c.label.empty() ? "L#" + std::to_string(fallback) : c.label;
}

// First (i, j) in row-major order with pred(i, j) false.
std::optional<std::pair<std::size_t, std::size_t>> first_failing_pair(
    std::size_t n, std::size_t m, const std::function<bool(std::size_t, std::size_t)>& pred) {
  std::vector<std::size_t> bad(n, kNone);
  detail::parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!pred(i, j)) {
        bad[i] = j;
        return;
      }
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (bad[i] != kNone) return std::make_pair(i, bad[i]);
  }
  return std::nullopt;
}

void validate_chain(const HopfData& h, const std::vector<Coideal>& chain) {
  if (chain.size() < 2) fail(ErrorCode::kInvalidArgument, "a series needs at least two links");
  for (const auto& c : chain) {
    if (c.subspace.ambient_dim() != h.dim()) fail(ErrorCode::kDimension, "chain link has wrong ambient dimension");
  }
  if (!(chain.front().subspace == span(h.dim(), {h.unit.coords()}))) {
    fail(ErrorCode::kInvalidArgument, "a series must start at C1");
  }
  if (chain.back().dim() != h.dim()) fail(ErrorCode::kInvalidArgument, "a series must end at A");
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    if (!chain[j + 1].subspace.contains(chain[j].subspace) || chain[j].dim() == chain[j + 1].dim()) {
      fail(ErrorCode::kInvalidArgument, "chain is not strictly increasing at link " + std::to_string(j));
    }
  }
}

std::vector<std::string> chain_labels(const std::vector<Coideal>& chain) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < chain.size(); ++j) out.push_back(label_of(chain[j], j));
  return out;
}

}  // namespace

Subspace relative_center(const HopfData& h, const Subspace& s) {
  if (!is_multiplicatively_closed(h, s)) fail(ErrorCode::kPrecondition, "relative_center: subspace is not closed under multiplication");
  const auto v = basis_elements(h, s);
  const std::size_t m = v.size();
  if (m == 0) return s;
  std::vector<std::vector<Vec>> rows_per_y(m);
  detail::parallel_for(m, [&](std::size_t t) {
    std::vector<AlgElement> comm(m);
    for (std::size_t k = 0; k < m; ++k) comm[k] = v[k] * v[t] - v[t] * v[k];
    EchelonBuilder eb(m);
    for (std::size_t i = 0; i < h.dim(); ++i) {
      Vec row(m);
      bool any = false;
      for (std::size_t k = 0; k < m; ++k) {
        row[k] = comm[k][i];
        any = any || !row[k].is_zero();
      }
      if (any) eb.insert(std::move(row));
    }
    rows_per_y[t] = eb.rows();
  });
  EchelonBuilder all(m);
  for (auto& rows : rows_per_y) {
    for (auto& r : rows) all.insert(std::move(r));
  }
  const Subspace sol = nullspace(ExactMatrix::from_rows(all.rows(), m));
  std::vector<Vec> out;
  for (const Vec& t : sol.basis()) {
    AlgElement x(h.sig);
    for (std::size_t k = 0; k < m; ++k) {
      if (!t[k].is_zero()) x += t[k] * v[k];
    }
    out.push_back(x.coords());
  }
  return span(h.dim(), out);
}

bool SeriesStep::passed() const {
  for (const auto& f : {integral_central, adjoint_triviality, normal, corner_closed, corner_central}) {
    if (f && !*f) return false;
  }
  return true;
}

SeriesStep check_solvable_step(const HopfData& h, const Coideal& small, const Coideal& big) {
  if (!small.integral) fail(ErrorCode::kPrecondition, "solvable step: the smaller link has no integral");
  if (!big.subspace.contains(small.subspace) || small.dim() == big.dim()) {
    fail(ErrorCode::kPrecondition, "solvable step: links are not strictly nested");
  }
  if (!is_multiplicatively_closed(h, big.subspace)) {
    fail(ErrorCode::kPrecondition, "solvable step: the larger link is not closed under multiplication");
  }
  SeriesStep step;
  step.small = label_of(small, 0);
  step.big = label_of(big, 1);
  const AlgElement& l = *small.integral;
  const auto b = basis_elements(h, big.subspace);

  bool central = big.subspace.contains(l.coords());
  if (!central) step.witness = "integral not in " + step.big;
  for (std::size_t y = 0; central && y < b.size(); ++y) {
    if (!(l * b[y] == b[y] * l)) {
      central = false;
      step.witness = "l does not commute with " + b[y].to_string();
    }
  }
  step.integral_central = central;

  std::vector<AlgElement> bl(b.size());
  std::vector<CycNum> eps(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    bl[i] = b[i] * l;
    eps[i] = counit_of(h, b[i]);
  }
  const auto bad = first_failing_pair(b.size(), b.size(), [&](std::size_t a, std::size_t c) {
    return adjoint_action(h, b[a], b[c]) * l == eps[a] * bl[c];
  });
  step.adjoint_triviality = !bad.has_value();
  if (bad && !step.witness) {
    step.witness = "(a, b) = (" + b[bad->first].to_string() + ", " + b[bad->second].to_string() + ")";
  }
  return step;
}

SeriesReport check_solvable_series(const HopfData& h, const std::vector<Coideal>& chain) {
  validate_chain(h, chain);
  std::vector<Coideal> links = chain;
  for (std::size_t j = 0; j + 1 < links.size(); ++j) attach_integral(h, links[j]);
  SeriesReport rep;
  rep.mode = "solvable";
  rep.chain = chain_labels(links);
  rep.verdict = true;
  for (std::size_t j = 0; j + 1 < links.size(); ++j) {
    SeriesStep s = check_solvable_step(h, links[j], links[j + 1]);
    s.small = rep.chain[j];
    s.big = rep.chain[j + 1];
    rep.verdict = rep.verdict && s.passed();
    rep.steps.push_back(std::move(s));
  }
  return rep;
}

SeriesReport check_nilpotent_series(const HopfData& h, const std::vector<Coideal>& chain) {
  validate_chain(h, chain);
  std::vector<Coideal> links = chain;
  std::vector<bool> normal(links.size());
  std::vector<std::optional<NormalityWitness>> nw(links.size());
  for (std::size_t j = 0; j < links.size(); ++j) {
    normal[j] = links[j].is_normal.known() ? links[j].is_normal.value() : is_normal_coideal(h, links[j], &nw[j]);
    if (j + 1 < links.size()) attach_integral(h, links[j]);
  }
  SeriesReport rep;
  rep.mode = "nilpotent";
  rep.chain = chain_labels(links);
  rep.verdict = true;
  for (std::size_t j = 0; j + 1 < links.size(); ++j) {
    SeriesStep s;
    s.small = rep.chain[j];
    s.big = rep.chain[j + 1];
    s.normal = normal[j] && normal[j + 1];
    for (std::size_t t : {j, j + 1}) {
      if (!normal[t] && !s.witness) {
        s.witness = rep.chain[t] + " is not normal";
        if (nw[t]) {
          const auto xs = basis_elements(h, links[t].subspace);
          s.witness = *s.witness + ": " + h.sig->name(nw[t]->a) + " acting on " + xs[nw[t]->x].to_string();
        }
      }
    }
    const AlgElement& l = *links[j].integral;
    // M = A l is spanned by b_a l. For idempotent l, z lies in M iff z l = z.
    std::vector<AlgElement> gens;
    std::vector<Vec> corner;
    for (std::size_t a = 0; a < h.dim(); ++a) {
      AlgElement g = h.basis(a) * l;
      if (g.is_zero()) continue;
      corner.push_back(g.coords());
      gens.push_back(std::move(g));
    }
    if (links[j].integral_is_projection) {
      const auto bad = first_failing_pair(gens.size(), gens.size(), [&](std::size_t a, std::size_t b) {
        const AlgElement z = gens[a] * gens[b];
        return z * l == z;
      });
      s.corner_closed = !bad.has_value();
    } else {
      s.corner_closed = is_multiplicatively_closed(h, span(h.dim(), corner));
    }
    if (!*s.corner_closed) {
      if (!s.witness) s.witness = "A l is not closed under multiplication";
      s.corner_central = false;
    } else {
      // y l lies in M, so it is central in M iff it commutes with the spanning set.
      const auto ys = basis_elements(h, links[j + 1].subspace);
      std::vector<AlgElement> yl(ys.size());
      for (std::size_t y = 0; y < ys.size(); ++y) yl[y] = ys[y] * l;
      const auto bad = first_failing_pair(ys.size(), gens.size(), [&](std::size_t y, std::size_t a) {
        return yl[y] * gens[a] == gens[a] * yl[y];
      });
      s.corner_central = !bad.has_value();
      if (bad && !s.witness) s.witness = "(" + ys[bad->first].to_string() + ") l is not central in A l";
    }
    rep.verdict = rep.verdict && s.passed();
    rep.steps.push_back(std::move(s));
  }
  return rep;
}

std::vector<std::vector<std::size_t>> enumerate_chains(const std::vector<Coideal>& links, std::size_t bottom,
                                                       std::size_t top) {
  const std::size_t n = links.size();
  if (bottom >= n || top >= n) fail(ErrorCode::kInvalidArgument, "chain endpoint out of range");
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));  // below[i][j]: L_i strictly inside L_j
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      below[i][j] = i != j && links[i].dim() < links[j].dim() && links[j].subspace.contains(links[i].subspace);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur{bottom};
  std::function<void(std::size_t)> dfs = [&](std::size_t at) {
    if (at == top) {
      out.push_back(cur);
      return;
    }
    for (std::size_t next = 0; next < n; ++next) {
      if (!below[at][next]) continue;
      if (next != top && !below[next][top]) continue;
      cur.push_back(next);
      dfs(next);
      cur.pop_back();
    }
  };
  if (bottom == top) return {cur};
  if (below[bottom][top]) dfs(bottom);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<Coideal> select_chain(const std::vector<Coideal>& links, const std::vector<std::size_t>& idx) {
  std::vector<Coideal> out;
  for (std::size_t i : idx) {
    if (i >= links.size()) fail(ErrorCode::kInvalidArgument, "chain index out of range");
    out.push_back(links[i]);
  }
  return out;
}

Classification classify_solvable_series(const HopfData& h, std::vector<Coideal> links, std::size_t bottom,
                                        std::size_t top) {
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (i != top) attach_integral(h, links[i]);
  }
  const auto chains = enumerate_chains(links, bottom, top);
  Classification out;
  for (const auto& c : chains) out.max_length = std::max(out.max_length, c.size());
  std::vector<std::vector<std::size_t>> candidates;
  for (const auto& c : chains) {
    if (c.size() == out.max_length) candidates.push_back(c);
  }
  out.candidates = candidates.size();
  out.reports.resize(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out.reports[i] = check_solvable_series(h, select_chain(links, candidates[i]));
    if (out.reports[i].verdict) out.chains.push_back(candidates[i]);
  }
  return out;
}

}  // namespace fqg
