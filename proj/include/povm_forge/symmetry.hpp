// Copyright 2026 The povm-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "povm_forge/hermitian.hpp"
#include "povm_forge/quantum.hpp"

namespace povm_forge {

inline constexpr double kUnitarityTol = 1e-9;
inline constexpr double kMatchTol = 1e-8;
inline constexpr std::size_t kDefaultMaxOrder = 10000;

/// A finite group given extensionally by its unitary representation
/// matrices σ(g). Element 0 is the identity.
class FiniteRep {
 public:
  int dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<ComplexMatrix>& elements() const { return elements_; }
  const ComplexMatrix& operator[](std::size_t g) const { return elements_[g]; }

  /// Index of the element matching m within tol, if any.
  std::optional<std::size_t> find(const ComplexMatrix& m, double tol = kMatchTol) const;
  bool is_real(double tol = kUnitarityTol) const;

  static FiniteRep trivial(int d);

 private:
  friend FiniteRep generate_group(std::span<const ComplexMatrix>, int, std::size_t);
  int dim_ = 0;
  std::vector<ComplexMatrix> elements_;
};

/// Breadth-first closure of the generators under multiplication. `dim` is
/// only consulted when the generator list is empty.
///
/// Throws UnitarityError for non-unitary generators and GroupError if the
/// closure exceeds max_order (e.g. a projective representation whose phases
/// never close; supply a central extension in that case).
FiniteRep generate_group(std::span<const ComplexMatrix> generators, int dim,
                         std::size_t max_order = kDefaultMaxOrder);

/// The orbit of an operator: (1/|G|) σ(g) base σ(g)†, with coinciding
/// elements merged (their weights added) so the orbit sum is unchanged.
struct Orbit {
  HermitianMatrix base;
  std::vector<HermitianMatrix> elements;
};

Orbit make_orbit(const HermitianMatrix& base, const FiniteRep& rep, double dedup_tol = kMatchTol);

/// P^G = {(1/|G|) σ(g) Π σ(g)†}; operators of one orbit are contiguous.
Povm symmetrize(const Povm& p, const FiniteRep& rep);

/// (1/|G|) Σ_g σ(g) op σ(g)†
HermitianMatrix orbit_sum(const HermitianMatrix& op, const FiniteRep& rep);

/// (1/|G|) Σ_g |χ(g)|², the real dimension of the Hermitian commutant.
/// Equals Σ m_i² over the irreducible constituents.
int complex_orbit_bound(const FiniteRep& rep);

/// (1/|G|) Σ_g (χ(g)² + χ(g²))/2, the dimension of the real symmetric
/// matrices commuting with a real orthogonal representation.
int real_orbit_bound(const FiniteRep& rep);

/// Every conjugate σ(g)ρ_iσ(g)† matches some ρ_j with equal prior.
bool is_symmetric_ensemble(const Ensemble& s, const FiniteRep& rep, double tol = kMatchTol);

}  // namespace povm_forge
