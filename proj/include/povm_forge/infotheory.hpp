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

#include "povm_forge/hermitian.hpp"
#include "povm_forge/quantum.hpp"

namespace povm_forge {

/// Probabilities above -kNegativeProbTol are clamped to zero; anything more
/// negative raises, since it signals a PSD violation upstream.
inline constexpr double kNegativeProbTol = 1e-12;

/// p_ij = p(i)·tr(Π_j ρ_i), states along rows and outcomes along columns.
struct JointDistribution {
  RealMatrix p;

  RealVector row_sums() const { return p.rowwise().sum(); }
  RealVector col_sums() const { return p.colwise().sum().transpose(); }
};

/// u·log2(u) with the continuous extension H(0) = 0.
double entropy_term(double u);

JointDistribution joint_distribution(const Ensemble& s, std::span<const HermitianMatrix> ops);
JointDistribution joint_distribution(const Ensemble& s, const Povm& p);

/// Σ H(p_ij) − Σ_i H(rows_i) − Σ_j H(cols_j), in bits.
double mutual_information(const JointDistribution& joint);

/// Mutual information of a measurement on an ensemble, in bits. Throws
/// ValidationError unless the POVM validates.
double mutual_information(const Ensemble& s, const Povm& p);

/// Formal information of an operator set that need not sum to the identity:
/// the row marginal is replaced by the priors p(i). Coincides with
/// mutual_information for a complete POVM; can be negative otherwise.
double orbit_information(const Ensemble& s, std::span<const HermitianMatrix> ops);

/// Whether column j of the joint distributions of (s, p) and (s, q) are
/// proportional, i.e. p_ij·Σ_k q_kj = q_ij·Σ_k p_kj for every i.
/// Throws DimensionError if the operator counts differ.
bool equality_condition(const Ensemble& s, std::span<const HermitianMatrix> p, std::span<const HermitianMatrix> q,
                        std::size_t j, double tol = 1e-9);
bool equality_condition(const Ensemble& s, const Povm& p, const Povm& q, std::size_t j, double tol = 1e-9);

}  // namespace povm_forge
