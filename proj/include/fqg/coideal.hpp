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

// Idempotent states, coideal subalgebras, group-like projections, integrals
// and the adjoint action.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqg/hopf.hpp"
#include "fqg/linalg.hpp"

namespace fqg {

/// A write-once boolean: unknown until computed, and a later computation must
/// agree with the first.
class Flag {
 public:
  bool known() const { return value_.has_value(); }
  bool value() const;  // kPrecondition when unknown
  std::optional<bool> get() const { return value_; }
  void set(bool v);

 private:
  std::optional<bool> value_;
};

struct Coideal {
  std::string label;
  Subspace subspace;
  std::optional<Functional> source_state;
  std::optional<AlgElement> integral;
  bool integral_is_projection = false;
  Flag is_unital;
  Flag is_subalgebra;
  Flag is_star_closed;
  Flag is_coideal;
  Flag is_normal;

  std::size_t dim() const { return subspace.dim(); }
};

/// Elements of a subspace basis as algebra elements.
std::vector<AlgElement> basis_elements(const HopfData& h, const Subspace& s);

/// Wraps a subspace and evaluates the unital / subalgebra / star / coideal flags.
Coideal make_coideal(const HopfData& h, Subspace s, std::string label = {});
Coideal trivial_coideal(const HopfData& h);  // C1
Coideal full_coideal(const HopfData& h);     // A

bool is_state_normalized(const HopfData& h, const Functional& phi);
/// Exact phi == phi * phi; kPrecondition when phi(1) != 1.
bool is_idempotent_state(const HopfData& h, const Functional& phi);
/// psi == phi * psi; kPrecondition unless both are idempotent states.
bool state_leq(const HopfData& h, const Functional& phi, const Functional& psi);

/// Image of x -> (id (x) phi) Delta(x); kPrecondition unless phi is idempotent.
Coideal coideal_from_state(const HopfData& h, const Functional& phi, std::string label = {});

/// Delta(x) lies in A (x) s.
bool delta_in_left_coideal(const HopfData& h, const AlgElement& x, const Subspace& s);
bool is_multiplicatively_closed(const HopfData& h, const Subspace& s);

bool is_group_like_projection(const HopfData& h, const AlgElement& p);
/// x -> h(x p) / h(p); kPrecondition without a Haar state, for a projection
/// that is not group-like, or when h(p) = 0.
Functional state_from_projection(const HopfData& h, const AlgElement& p);

/// The integral of a coideal. The solution space of l x = x l = eps(x) l must
/// be one-dimensional (kStructure otherwise). The representative is
/// idempotent when eps(l) != 0, else its first non-zero coordinate is 1 and
/// *is_projection is set to false.
AlgElement find_integral(const HopfData& h, const Coideal& c, bool* is_projection = nullptr);
/// Computes and stores the integral if absent.
void attach_integral(const HopfData& h, Coideal& c);

/// a_(1) b S(a_(2)).
AlgElement adjoint_action(const HopfData& h, const AlgElement& a, const AlgElement& b);

struct NormalityWitness {
  std::size_t a = 0;   // canonical basis index
  std::size_t x = 0;   // index into the coideal basis
};

/// a . x in L for all basis a of A and basis x of L. Sets c.is_normal.
bool is_normal_coideal(const HopfData& h, Coideal& c, std::optional<NormalityWitness>* witness = nullptr);

}  // namespace fqg
