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
#include <span>
#include <vector>

#include "povm_forge/hermitian.hpp"
#include "povm_forge/quantum.hpp"
#include "povm_forge/symmetry.hpp"

namespace povm_forge {

inline constexpr double kRankTol = 1e-10;

/// Linear system D·λ = c expressing Σ λ_i Π′_i = I_d with Σ λ_i = 1.
///
/// Row 0 is all ones; rows 1..d² are the basis coordinates of each Π′_i in
/// the order of HermitianBasis. The target is one for row 0 and the d
/// diagonal rows, zero elsewhere.
struct DesignMatrix {
  RealMatrix matrix;
  RealVector target;

  std::size_t columns() const { return static_cast<std::size_t>(matrix.cols()); }
};

/// Throws DegenerateOperatorError unless every tr(Π′_i) = d within 1e-9.
DesignMatrix build_design_matrix(std::span<const HermitianMatrix> normalized_ops);

/// Rank by Gaussian elimination with partial pivoting; a pivot counts when
/// it exceeds rank_tol times the largest initial |entry|.
int numeric_rank(const RealMatrix& m, double rank_tol = kRankTol);

/// λ = Σ_k μ_k ν_k with each ν_k a basic feasible solution of D·ν = c.
struct IdentityDecomposition {
  std::vector<double> weights;        // μ_k
  std::vector<RealVector> solutions;  // ν_k, same length as λ

  std::size_t size() const { return weights.size(); }
  RealVector recombine() const;
};

/// Indices of the strictly positive entries.
std::vector<std::size_t> support_of(const RealVector& v);

/// Splits a feasible point λ ≥ 0 of D·λ = c along kernel directions of the
/// active columns until every piece has linearly independent support.
/// Identical leaves (same support) are merged. Throws DecompositionError if
/// λ is infeasible.
IdentityDecomposition decompose_feasible(const DesignMatrix& design, const RealVector& lambda,
                                         double rank_tol = kRankTol);

IdentityDecomposition decompose_identity(const NormalizedPovm& normalized, double rank_tol = kRankTol);

struct PruneResult {
  Povm povm;
  /// Number of orbits in the result; equals the operator count for
  /// prune_povm.
  std::size_t orbit_count = 0;
  double info_before = 0.0;
  double info_after = 0.0;
  IdentityDecomposition decomposition;
  std::vector<double> leaf_infos;
};

/// Reduces a POVM to at most d² rank-one operators (d(d+1)/2 for real data)
/// without losing mutual information: the POVM is split into rank-one
/// pieces, decomposed into basic solutions and the best leaf is kept.
PruneResult prune_povm(const Ensemble& s, const Povm& p);

/// Symmetric counterpart: the result is a union of group orbits, at most
/// complex_orbit_bound(rep) of them, or real_orbit_bound(rep) when real_mode
/// is set and the ensemble is real. Throws SymmetryError if the ensemble is
/// not symmetric under rep.
PruneResult prune_symmetric_povm(const Ensemble& s, const Povm& p, const FiniteRep& rep, bool real_mode);

}  // namespace povm_forge
