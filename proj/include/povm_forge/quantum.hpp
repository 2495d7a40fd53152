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
#include <string>
#include <vector>

#include "povm_forge/hermitian.hpp"

namespace povm_forge {

inline constexpr double kValidationTol = 1e-9;
inline constexpr double kPriorSumTol = 1e-12;
/// Operators with max-norm at or below this are treated as zero and dropped.
inline constexpr double kZeroOperatorTol = 1e-12;

/// Outcome of a validation pass. Empty `violations` means valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

/// States ρ_i with prior probabilities p(i). The constructor only checks
/// structure (non-empty, equal counts, shared dimension); use
/// validate_ensemble for the physical invariants.
class Ensemble {
 public:
  Ensemble(std::vector<HermitianMatrix> states, std::vector<double> priors);

  int dim() const { return states_.front().dim(); }
  std::size_t size() const { return states_.size(); }
  const std::vector<HermitianMatrix>& states() const { return states_; }
  const std::vector<double>& priors() const { return priors_; }
  const HermitianMatrix& state(std::size_t i) const { return states_[i]; }
  double prior(std::size_t i) const { return priors_[i]; }

  /// Σ p(i) ρ_i
  HermitianMatrix average_state() const;
  bool is_real(double tol = kHermTol) const;

  /// Pure-state ensemble from kets; kets are normalized.
  static Ensemble from_kets(const std::vector<ComplexVector>& kets, std::vector<double> priors);
  static Ensemble uniform(std::vector<HermitianMatrix> states);

 private:
  std::vector<HermitianMatrix> states_;
  std::vector<double> priors_;
};

/// Measurement operators Π_j. Duplicates are allowed (multiset semantics).
class Povm {
 public:
  explicit Povm(std::vector<HermitianMatrix> operators);

  int dim() const { return ops_.front().dim(); }
  std::size_t size() const { return ops_.size(); }
  const std::vector<HermitianMatrix>& operators() const { return ops_; }
  const HermitianMatrix& operator[](std::size_t j) const { return ops_[j]; }

  HermitianMatrix sum() const;
  bool is_real(double tol = kHermTol) const;

 private:
  std::vector<HermitianMatrix> ops_;
};

/// Weights λ_i = tr(Π_i)/d and normalized operators Π′_i = dΠ_i/tr(Π_i),
/// so that Σ λ_i Π′_i = I_d.
struct NormalizedPovm {
  std::vector<double> weights;
  std::vector<HermitianMatrix> normalized_ops;

  int dim() const { return normalized_ops.front().dim(); }
  std::size_t size() const { return weights.size(); }
};

/// Checks PSD (within tol), non-zero operators (unless allow_zero_ops) and
/// Σ Π_j = I_d within tol. Throws DimensionError on mixed dimensions.
ValidationReport validate_povm(const Povm& p, double tol = kValidationTol, bool allow_zero_ops = false);

/// Checks each ρ_i PSD with unit trace (within tol), p(i) ≥ 0 and
/// Σ p(i) = 1 (within kPriorSumTol).
ValidationReport validate_ensemble(const Ensemble& s, double tol = kValidationTol);

/// {λΠ_1, …, λΠ_m, (1−λ)Q_1, …, (1−λ)Q_n} with vanishing operators dropped.
Povm convex_combine(const Povm& p, const Povm& q, double lambda);

/// Replaces Π_index by λΠ_index, (1−λ)Π_index (in place, then appended).
/// A vanishing part is dropped.
Povm split_operator(const Povm& p, std::size_t index, double lambda);

NormalizedPovm normalize_povm(const Povm& p);

/// Splits every operator into eigenvalue-weighted rank-one pieces.
Povm split_rank_one(const Povm& p, double cutoff = 1e-12);

/// Square-root measurement Π_i = ρ^{-1/2} p(i) ρ_i ρ^{-1/2}, ρ = Σ p(i)ρ_i.
/// If ρ is rank-deficient, I − Π_supp is appended as a final operator.
Povm pretty_good_measurement(const Ensemble& s);

}  // namespace povm_forge
