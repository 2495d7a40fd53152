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

#include "povm_forge/caratheodory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "povm_forge/errors.hpp"
#include "povm_forge/infotheory.hpp"

namespace povm_forge {

namespace {

constexpr double kFeasibilityTol = 1e-8;

/// Columns `cols` of `m`.
RealMatrix select_columns(const RealMatrix& m, const std::vector<std::size_t>& cols) {
  RealMatrix out(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = m.col(cols[k]);
  return out;
}

/// Gauss-Jordan elimination with partial pivoting over the columns in
/// order. Returns a kernel vector for the first dependent column, or nullopt
/// when the columns are linearly independent.
std::optional<RealVector> first_kernel_direction(RealMatrix a, double rank_tol) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  const double scale = a.size() ? a.cwiseAbs().maxCoeff() : 0.0;
  const double threshold = rank_tol * scale;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols; ++c) {
    Eigen::Index best = r;
    double best_abs = 0.0;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (std::abs(a(i, c)) > best_abs) {
        best_abs = std::abs(a(i, c));
        best = i;
      }
    }
    if (r >= rows || best_abs <= threshold) {
      RealVector q = RealVector::Zero(cols);
      q[c] = 1.0;
      for (std::size_t k = 0; k < pivot_cols.size(); ++k) q[pivot_cols[k]] = -a(static_cast<Eigen::Index>(k), c);
      return q;
    }
    a.row(r).swap(a.row(best));
    a.row(r) /= a(r, c);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i != r && a(i, c) != 0.0) a.row(i) -= a(i, c) * a.row(r);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return std::nullopt;
}

struct Decomposer {
  const DesignMatrix& design;
  double rank_tol;
  std::size_t max_depth;
  std::map<std::vector<std::size_t>, std::size_t> leaf_index;
  IdentityDecomposition out;

  void add_leaf(const RealVector& lambda, const std::vector<std::size_t>& supp, double weight) {
    if (auto it = leaf_index.find(supp); it != leaf_index.end()) {
      out.weights[it->second] += weight;
      return;
    }
    // Re-solve on the support: the columns are independent, so the basic
    // solution is unique and this strips accumulated rounding.
    RealVector leaf = lambda;
    const RealMatrix sub = select_columns(design.matrix, supp);
    const RealVector exact = sub.colPivHouseholderQr().solve(design.target);
    if (exact.size() && exact.minCoeff() >= -1e-12 &&
        (sub * exact - design.target).norm() <= (sub * lambda(supp) - design.target).norm()) {
      leaf.setZero();
      for (std::size_t k = 0; k < supp.size(); ++k) leaf[supp[k]] = std::max(0.0, exact[k]);
    }
    leaf_index.emplace(supp, out.weights.size());
    out.weights.push_back(weight);
    out.solutions.push_back(std::move(leaf));
  }

  RealVector step(const RealVector& lambda, const std::vector<std::size_t>& supp, const RealVector& q,
                  double t) const {
    RealVector next = lambda;
    const double floor = 1e-13 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
    for (std::size_t k = 0; k < supp.size(); ++k) {
      double v = lambda[supp[k]] + t * q[k];
      if (v <= floor) v = 0.0;
      next[supp[k]] = v;
    }
    return next;
  }

  void run(const RealVector& lambda, double weight, std::size_t depth) {
    if (depth > max_depth) {
      throw DecompositionError("decomposition recursion exceeded the initial support size");
    }
    const auto supp = support_of(lambda);
    const auto q = first_kernel_direction(select_columns(design.matrix, supp), rank_tol);
    if (!q) {
      add_leaf(lambda, supp, weight);
      return;
    }
    // Largest steps along ±q that keep every coordinate non-negative.
    double t_plus = std::numeric_limits<double>::infinity();
    double t_minus = std::numeric_limits<double>::infinity();
    std::size_t hit_plus = 0, hit_minus = 0;
    for (std::size_t k = 0; k < supp.size(); ++k) {
      const double lam = lambda[supp[k]];
      const double qk = (*q)[k];
      if (qk < 0.0 && lam / -qk < t_plus) {
        t_plus = lam / -qk;
        hit_plus = k;
      }
      if (qk > 0.0 && lam / qk < t_minus) {
        t_minus = lam / qk;
        hit_minus = k;
      }
    }
    if (!std::isfinite(t_plus) || !std::isfinite(t_minus)) {
      // The all-ones row forces Σq = 0, so both signs must be present.
      throw DecompositionError("kernel direction does not change sign; the design matrix lacks its sum row");
    }
    RealVector plus = step(lambda, supp, *q, t_plus);
    RealVector minus = step(lambda, supp, *q, -t_minus);
    plus[supp[hit_plus]] = 0.0;
    minus[supp[hit_minus]] = 0.0;
    const double total = t_plus + t_minus;
    run(plus, weight * t_minus / total, depth + 1);
    run(minus, weight * t_plus / total, depth + 1);
  }
};

double leaf_information(const Ensemble& s, const std::vector<HermitianMatrix>& ops) {
  return mutual_information(s, Povm(ops));
}

}  // namespace

DesignMatrix build_design_matrix(std::span<const HermitianMatrix> normalized_ops) {
  if (normalized_ops.empty()) throw DimensionError("design matrix needs at least one operator");
  const int d = normalized_ops.front().dim();
  const Eigen::Index n = static_cast<Eigen::Index>(normalized_ops.size());
  DesignMatrix dm{RealMatrix::Zero(1 + d * d, n), RealVector::Zero(1 + d * d)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& op = normalized_ops[static_cast<std::size_t>(i)];
    if (op.dim() != d) throw DimensionError("normalized operators have mixed dimensions");
    if (std::abs(op.trace() - d) > 1e-9) {
      throw DegenerateOperatorError("normalized operator " + std::to_string(i) + " has trace " +
                                    std::to_string(op.trace()) + ", expected " + std::to_string(d));
    }
    dm.matrix(0, i) = 1.0;
    dm.matrix.block(1, i, d * d, 1) = coords(op);
  }
  dm.target.head(1 + d).setOnes();
  return dm;
}

int numeric_rank(const RealMatrix& m, double rank_tol) {
  RealMatrix a = m;
  const double threshold = rank_tol * (a.size() ? a.cwiseAbs().maxCoeff() : 0.0);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index best = r;
    double best_abs = 0.0;
    for (Eigen::Index i = r; i < a.rows(); ++i) {
      if (std::abs(a(i, c)) > best_abs) {
        best_abs = std::abs(a(i, c));
        best = i;
      }
    }
    if (best_abs <= threshold || best_abs == 0.0) continue;
    a.row(r).swap(a.row(best));
    for (Eigen::Index i = r + 1; i < a.rows(); ++i) a.row(i) -= (a(i, c) / a(r, c)) * a.row(r);
    ++r;
  }
  return static_cast<int>(r);
}

RealVector IdentityDecomposition::recombine() const {
  if (solutions.empty()) return {};
  RealVector total = RealVector::Zero(solutions.front().size());
  for (std::size_t k = 0; k < solutions.size(); ++k) total += weights[k] * solutions[k];
  return total;
}

std::vector<std::size_t> support_of(const RealVector& v) {
  std::vector<std::size_t> s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] > 0.0) s.push_back(static_cast<std::size_t>(i));
  }
  return s;
}

IdentityDecomposition decompose_feasible(const DesignMatrix& design, const RealVector& lambda, double rank_tol) {
  if (lambda.size() != design.matrix.cols()) throw DimensionError("weight vector does not match design matrix");
  if (lambda.size() == 0 || lambda.minCoeff() < 0.0) throw DecompositionError("weights must be non-negative");
  const double residual = (design.matrix * lambda - design.target).cwiseAbs().maxCoeff();
  if (residual > kFeasibilityTol) {
    throw DecompositionError("weights do not solve the design system (residual " + std::to_string(residual) + ")");
  }
  Decomposer dec{design, rank_tol, support_of(lambda).size(), {}, {}};
  dec.run(lambda, 1.0, 0);
  return std::move(dec.out);
}

IdentityDecomposition decompose_identity(const NormalizedPovm& normalized, double rank_tol) {
  const DesignMatrix design = build_design_matrix(normalized.normalized_ops);
  RealVector lambda(static_cast<Eigen::Index>(normalized.size()));
  for (std::size_t i = 0; i < normalized.size(); ++i) lambda[static_cast<Eigen::Index>(i)] = normalized.weights[i];
  return decompose_feasible(design, lambda, rank_tol);
}

PruneResult prune_povm(const Ensemble& s, const Povm& p) {
  const double before = mutual_information(s, p);
  const NormalizedPovm normalized = normalize_povm(split_rank_one(p));
  IdentityDecomposition dec = decompose_identity(normalized);

  std::vector<double> infos;
  std::vector<HermitianMatrix> best_ops;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& nu : dec.solutions) {
    std::vector<HermitianMatrix> ops;
    for (std::size_t j : support_of(nu)) ops.push_back(nu[static_cast<Eigen::Index>(j)] * normalized.normalized_ops[j]);
    const double info = leaf_information(s, ops);
    infos.push_back(info);
    if (info > best) {
      best = info;
      best_ops = std::move(ops);
    }
  }
  const std::size_t count = best_ops.size();
  return PruneResult{Povm(std::move(best_ops)), count, before, best, std::move(dec), std::move(infos)};
}

PruneResult prune_symmetric_povm(const Ensemble& s, const Povm& p, const FiniteRep& rep, bool real_mode) {
  if (rep.dim() != s.dim() || rep.dim() != p.dim()) throw DimensionError("group, ensemble and POVM dimensions differ");
  if (!is_symmetric_ensemble(s, rep)) throw SymmetryError("ensemble is not symmetric under the supplied group");
  if (real_mode && !rep.is_real()) throw GroupError("real mode requires a real orthogonal representation");
  const double before = mutual_information(s, p);

  // For a real ensemble, Re(Π) yields the same statistics as Π and keeps the
  // orbit sums inside the real commutant.
  std::vector<HermitianMatrix> start = p.operators();
  if (real_mode && s.is_real()) {
    for (auto& op : start) op = op.real_part();
  }
  const NormalizedPovm normalized = normalize_povm(split_rank_one(Povm(std::move(start))));
  std::vector<HermitianMatrix> sums;
  sums.reserve(normalized.size());
  for (const auto& op : normalized.normalized_ops) sums.push_back(orbit_sum(op, rep));

  const DesignMatrix design = build_design_matrix(sums);
  RealVector lambda(static_cast<Eigen::Index>(normalized.size()));
  for (std::size_t i = 0; i < normalized.size(); ++i) lambda[static_cast<Eigen::Index>(i)] = normalized.weights[i];
  IdentityDecomposition dec = decompose_feasible(design, lambda);

  const double w = 1.0 / static_cast<double>(rep.order());
  std::vector<double> infos;
  std::vector<HermitianMatrix> best_ops;
  std::size_t best_orbits = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& nu : dec.solutions) {
    std::vector<HermitianMatrix> ops;
    const auto supp = support_of(nu);
    for (std::size_t i : supp) {
      const HermitianMatrix scaled = (nu[static_cast<Eigen::Index>(i)] * w) * normalized.normalized_ops[i];
      for (const auto& g : rep.elements()) ops.push_back(scaled.conjugated_by(g));
    }
    const double info = leaf_information(s, ops);
    infos.push_back(info);
    if (info > best) {
      best = info;
      best_ops = std::move(ops);
      best_orbits = supp.size();
    }
  }
  return PruneResult{Povm(std::move(best_ops)), best_orbits, before, best, std::move(dec), std::move(infos)};
}

}  // namespace povm_forge
