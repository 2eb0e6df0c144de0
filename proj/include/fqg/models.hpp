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

// Constructors for the concrete finite quantum groups and their named
// functionals, projections and coideal spans.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fqg/hopf.hpp"

namespace fqg {

/// Basis of the Kac-Paljutkin algebra C+C+C+C+M_2.
enum KpBasis : std::size_t { kE1 = 0, kE2, kE3, kE4, kA11, kA12, kA21, kA22 };

HopfData kac_paljutkin();

/// Sekine quantum group A_k, k >= 2. Basis d(i,j) at i*k+j, then the matrix
/// units e(i,j) of M_k at k^2 + i*k + j.
HopfData sekine(int k);

std::size_t sekine_d(int k, int i, int j);
std::size_t sekine_e(int k, int i, int j);

class FiniteGroupTable {
 public:
  /// Validates the group axioms; throws kInvalidArgument otherwise.
  FiniteGroupTable(std::string name, std::vector<std::vector<int>> mul);

  /// z<n>, products like z2xz4, and s3.
  static FiniteGroupTable from_name(const std::string& name);
  static FiniteGroupTable cyclic_product(const std::vector<int>& orders);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inverse(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  bool is_abelian() const;
  /// Cyclic factor orders when the table was built as a product of cyclic
  /// groups (element index = mixed-radix digits, last factor fastest).
  const std::vector<int>& cyclic_factors() const { return factors_; }
  std::string element_name(int a) const;

 private:
  std::string name_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  int identity_ = 0;
  std::vector<int> factors_;
};

/// C(G) on the basis of point masses delta_g.
HopfData function_algebra(const FiniteGroupTable& g);

/// C[G] for abelian G. The chassis needs matrix units, so the basis is the
/// minimal projections p_chi = |G|^-1 sum_g conj(chi(g)) g indexed by the
/// characters chi (same indexing as the group elements).
HopfData group_algebra(const FiniteGroupTable& g);
/// The group element g in group_algebra(g) coordinates.
AlgElement group_element(const HopfData& cg, const FiniteGroupTable& g, int element);

/// Dual basis functional b_i^*.
Functional dual_basis(const SigPtr& sig, std::size_t i);

struct KpNamed {
  // Index 0 holds object 1 and so on.
  std::vector<Functional> rho;
  std::vector<AlgElement> p;
  std::vector<Subspace> listed_L;  // the spans as printed in the literature
};

KpNamed kp_named_objects(const HopfData& kp);

struct SekineNamed {
  int k = 0;
  // Index i-1 holds object i, for i = 1..k.
  std::vector<std::vector<std::pair<int, int>>> gamma;
  std::vector<Functional> h;
  std::vector<AlgElement> p;
  std::vector<Subspace> listed_L;
  AlgElement d00;
};

SekineNamed sekine_named_objects(const HopfData& a, int k);

}  // namespace fqg
