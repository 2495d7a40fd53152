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

#include "povm_forge/quantum.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "povm_forge/errors.hpp"

namespace povm_forge {

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void require_same_dim(const std::vector<HermitianMatrix>& ms, const char* what) {
  if (ms.empty()) throw DimensionError(std::string(what) + " must not be empty");
  const int d = ms.front().dim();
  for (const auto& m : ms) {
    if (m.dim() != d) throw DimensionError(std::string(what) + " have mixed dimensions");
  }
}

void push_scaled(std::vector<HermitianMatrix>& out, const HermitianMatrix& op, double s) {
  HermitianMatrix scaled = s * op;
  if (scaled.max_norm() > kZeroOperatorTol) out.push_back(std::move(scaled));
}

void require_unit_interval(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw RangeError("mixing weight must lie in [0, 1], got " + fmt_double(lambda));
  }
}

}  // namespace

Ensemble::Ensemble(std::vector<HermitianMatrix> states, std::vector<double> priors)
    : states_(std::move(states)), priors_(std::move(priors)) {
  require_same_dim(states_, "ensemble states");
  if (states_.size() != priors_.size()) {
    throw DimensionError("ensemble has " + std::to_string(states_.size()) + " states but " +
                         std::to_string(priors_.size()) + " priors");
  }
}

HermitianMatrix Ensemble::average_state() const {
  HermitianMatrix rho = HermitianMatrix::zero(dim());
  for (std::size_t i = 0; i < size(); ++i) rho += priors_[i] * states_[i];
  return rho;
}

bool Ensemble::is_real(double tol) const {
  for (const auto& s : states_) {
    if (!s.is_real(tol)) return false;
  }
  return true;
}

Ensemble Ensemble::from_kets(const std::vector<ComplexVector>& kets, std::vector<double> priors) {
  std::vector<HermitianMatrix> states;
  states.reserve(kets.size());
  for (const auto& k : kets) {
    const double n = k.norm();
    if (n == 0.0) throw DimensionError("zero state vector");
    states.push_back(HermitianMatrix::projector(k / n));
  }
  return Ensemble(std::move(states), std::move(priors));
}

Ensemble Ensemble::uniform(std::vector<HermitianMatrix> states) {
  std::vector<double> priors(states.size(), states.empty() ? 0.0 : 1.0 / static_cast<double>(states.size()));
  return Ensemble(std::move(states), std::move(priors));
}

Povm::Povm(std::vector<HermitianMatrix> operators) : ops_(std::move(operators)) {
  require_same_dim(ops_, "POVM operators");
}

HermitianMatrix Povm::sum() const {
  HermitianMatrix s = HermitianMatrix::zero(dim());
  for (const auto& op : ops_) s += op;
  return s;
}

bool Povm::is_real(double tol) const {
  for (const auto& op : ops_) {
    if (!op.is_real(tol)) return false;
  }
  return true;
}

ValidationReport validate_povm(const Povm& p, double tol, bool allow_zero_ops) {
  ValidationReport report;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double lo = min_eigenvalue(p[j]);
    if (lo < -tol) {
      report.violations.push_back("operator " + std::to_string(j) + " is not PSD (min eigenvalue " +
                                  fmt_double(lo) + ")");
    }
    if (!allow_zero_ops && p[j].max_norm() <= kZeroOperatorTol) {
      report.violations.push_back("operator " + std::to_string(j) + " is zero");
    }
  }
  const double defect = max_abs_diff(p.sum().matrix(), ComplexMatrix::Identity(p.dim(), p.dim()));
  if (defect > tol) {
    report.violations.push_back("operators do not sum to the identity (max deviation " + fmt_double(defect) +
                                ")");
  }
  return report;
}

ValidationReport validate_ensemble(const Ensemble& s, double tol) {
  ValidationReport report;
  double total = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double pi = s.prior(i);
    if (!std::isfinite(pi) || pi < 0.0) {
      report.violations.push_back("prior " + std::to_string(i) + " is negative (" + fmt_double(pi) + ")");
    }
    total += pi;
    const double tr = s.state(i).trace();
    if (std::abs(tr - 1.0) > tol) {
      report.violations.push_back("state " + std::to_string(i) + " has trace " + fmt_double(tr) + ", expected 1");
    }
    const double lo = min_eigenvalue(s.state(i));
    if (lo < -tol) {
      report.violations.push_back("state " + std::to_string(i) + " is not PSD (min eigenvalue " + fmt_double(lo) +
                                  ")");
    }
  }
  if (std::abs(total - 1.0) > kPriorSumTol) {
    report.violations.push_back("priors sum to " + fmt_double(total) + ", expected 1");
  }
  return report;
}

Povm convex_combine(const Povm& p, const Povm& q, double lambda) {
  require_unit_interval(lambda);
  if (p.dim() != q.dim()) throw DimensionError("convex_combine: POVM dimensions differ");
  std::vector<HermitianMatrix> ops;
  ops.reserve(p.size() + q.size());
  for (const auto& op : p.operators()) push_scaled(ops, op, lambda);
  for (const auto& op : q.operators()) push_scaled(ops, op, 1.0 - lambda);
  return Povm(std::move(ops));
}

Povm split_operator(const Povm& p, std::size_t index, double lambda) {
  require_unit_interval(lambda);
  if (index >= p.size()) {
    throw RangeError("split_operator: index " + std::to_string(index) + " out of range for " +
                     std::to_string(p.size()) + " operators");
  }
  std::vector<HermitianMatrix> ops;
  ops.reserve(p.size() + 1);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j == index) {
      push_scaled(ops, p[j], lambda);
    } else {
      ops.push_back(p[j]);
    }
  }
  push_scaled(ops, p[index], 1.0 - lambda);
  return Povm(std::move(ops));
}

NormalizedPovm normalize_povm(const Povm& p) {
  const double d = static_cast<double>(p.dim());
  NormalizedPovm out;
  out.weights.reserve(p.size());
  out.normalized_ops.reserve(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double tr = p[j].trace();
    if (!(tr > kZeroOperatorTol)) {
      throw DegenerateOperatorError("operator " + std::to_string(j) + " has trace " + fmt_double(tr));
    }
    out.weights.push_back(tr / d);
    out.normalized_ops.push_back((d / tr) * p[j]);
  }
  return out;
}

Povm split_rank_one(const Povm& p, double cutoff) {
  std::vector<HermitianMatrix> ops;
  for (const auto& op : p.operators()) {
    auto pieces = rank_one_pieces(op, cutoff);
    for (auto& piece : pieces) ops.push_back(std::move(piece));
  }
  return Povm(std::move(ops));
}

Povm pretty_good_measurement(const Ensemble& s) {
  const HermitianMatrix rho = s.average_state();
  const HermitianMatrix n = inv_sqrt_psd(rho);
  std::vector<HermitianMatrix> ops;
  ops.reserve(s.size() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const ComplexMatrix m = n.matrix() * (s.prior(i) * s.state(i).matrix()) * n.matrix();
    push_scaled(ops, HermitianMatrix(m), 1.0);
  }
  const HermitianMatrix completion = HermitianMatrix::identity(s.dim()) - support_projector(rho);
  if (completion.max_norm() > 1e-9) ops.push_back(completion);
  return Povm(std::move(ops));
}

}  // namespace povm_forge
