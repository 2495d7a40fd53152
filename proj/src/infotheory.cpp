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

#include "povm_forge/infotheory.hpp"

#include <cmath>
#include <string>

#include "povm_forge/errors.hpp"

namespace povm_forge {

double entropy_term(double u) { return u > 0.0 ? u * std::log2(u) : 0.0; }

JointDistribution joint_distribution(const Ensemble& s, std::span<const HermitianMatrix> ops) {
  const auto m = static_cast<Eigen::Index>(s.size());
  const auto n = static_cast<Eigen::Index>(ops.size());
  JointDistribution joint{RealMatrix::Zero(m, n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    if (ops[j].dim() != s.dim()) throw DimensionError("operator and state dimensions differ");
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    const ComplexMatrix& rho = s.state(i).matrix();
    for (Eigen::Index j = 0; j < n; ++j) {
      // tr(Π ρ) for Hermitian Π, ρ is Σ_kl Π_kl conj(ρ_kl).
      const double overlap = ops[j].matrix().cwiseProduct(rho.conjugate()).sum().real();
      double v = s.prior(i) * overlap;
      if (v < 0.0) {
        if (v < -kNegativeProbTol) {
          throw PositivityError("negative probability " + std::to_string(v) + " at (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
        }
        v = 0.0;
      }
      joint.p(i, j) = v;
    }
  }
  return joint;
}

JointDistribution joint_distribution(const Ensemble& s, const Povm& p) {
  return joint_distribution(s, std::span<const HermitianMatrix>(p.operators()));
}

double mutual_information(const JointDistribution& joint) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < joint.p.rows(); ++i) {
    for (Eigen::Index j = 0; j < joint.p.cols(); ++j) total += entropy_term(joint.p(i, j));
  }
  const RealVector rows = joint.row_sums();
  const RealVector cols = joint.col_sums();
  for (Eigen::Index i = 0; i < rows.size(); ++i) total -= entropy_term(rows[i]);
  for (Eigen::Index j = 0; j < cols.size(); ++j) total -= entropy_term(cols[j]);
  return total;
}

double mutual_information(const Ensemble& s, const Povm& p) {
  if (p.dim() != s.dim()) throw DimensionError("POVM and ensemble dimensions differ");
  const auto report = validate_povm(p);
  if (!report.ok()) throw ValidationError("invalid POVM: " + report.violations.front());
  return mutual_information(joint_distribution(s, p));
}

double orbit_information(const Ensemble& s, std::span<const HermitianMatrix> ops) {
  const JointDistribution joint = joint_distribution(s, ops);
  double total = 0.0;
  for (Eigen::Index i = 0; i < joint.p.rows(); ++i) {
    for (Eigen::Index j = 0; j < joint.p.cols(); ++j) total += entropy_term(joint.p(i, j));
  }
  for (std::size_t i = 0; i < s.size(); ++i) total -= entropy_term(s.prior(i));
  const RealVector cols = joint.col_sums();
  for (Eigen::Index j = 0; j < cols.size(); ++j) total -= entropy_term(cols[j]);
  return total;
}

bool equality_condition(const Ensemble& s, std::span<const HermitianMatrix> p, std::span<const HermitianMatrix> q,
                        std::size_t j, double tol) {
  if (p.size() != q.size()) {
    throw DimensionError("equality_condition: operator counts differ (" + std::to_string(p.size()) + " vs " +
                         std::to_string(q.size()) + ")");
  }
  if (j >= p.size()) throw RangeError("equality_condition: column index out of range");
  const JointDistribution jp = joint_distribution(s, p.subspan(j, 1));
  const JointDistribution jq = joint_distribution(s, q.subspan(j, 1));
  const double sp = jp.p.col(0).sum();
  const double sq = jq.p.col(0).sum();
  for (Eigen::Index i = 0; i < jp.p.rows(); ++i) {
    if (std::abs(jp.p(i, 0) * sq - jq.p(i, 0) * sp) > tol) return false;
  }
  return true;
}

bool equality_condition(const Ensemble& s, const Povm& p, const Povm& q, std::size_t j, double tol) {
  return equality_condition(s, std::span<const HermitianMatrix>(p.operators()),
                            std::span<const HermitianMatrix>(q.operators()), j, tol);
}

}  // namespace povm_forge
