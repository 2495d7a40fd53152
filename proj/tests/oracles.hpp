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

// Reference computations that deliberately avoid the library's own
// numerics. Tests compare library output against these.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "povm_forge/hermitian.hpp"
#include "povm_forge/quantum.hpp"

namespace oracle {

using povm_forge::ComplexMatrix;
using povm_forge::RealMatrix;
using povm_forge::RealVector;

inline Eigen::VectorXd eigenvalues(const ComplexMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(m, Eigen::EigenvaluesOnly).eigenvalues();
}

// Row reduction with full pivoting, relative threshold.
inline int rank(RealMatrix a, double tol = 1e-9) {
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  int r = 0;
  for (Eigen::Index col = 0; col < a.cols() && r < a.rows(); ++col) {
    Eigen::Index best = r;
    for (Eigen::Index i = r; i < a.rows(); ++i) {
      if (std::abs(a(i, col)) > std::abs(a(best, col))) best = i;
    }
    if (std::abs(a(best, col)) <= tol * scale) continue;
    a.row(best).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < a.rows(); ++i) a.row(i) -= (a(i, col) / a(r, col)) * a.row(r);
    ++r;
  }
  return r;
}

// p_ij = p_i tr(ρ_i Π_j) written out elementwise.
inline RealMatrix joint(const povm_forge::Ensemble& s, const std::vector<povm_forge::HermitianMatrix>& ops) {
  RealMatrix p(static_cast<Eigen::Index>(s.size()), static_cast<Eigen::Index>(ops.size()));
  const int d = s.dim();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < ops.size(); ++j) {
      std::complex<double> t = 0;
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) t += s.state(i)(r, c) * ops[j](c, r);
      }
      p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s.prior(i) * t.real();
    }
  }
  return p;
}

// H(rows) + H(columns) − H(joint) in bits. Passing priors replaces the row
// entropy by H(priors), which is the formal information of an incomplete
// operator set such as a single orbit.
inline double information(const RealMatrix& p, const std::vector<double>* priors = nullptr) {
  const auto plogp = [](double v) { return v > 0.0 ? v * std::log2(v) : 0.0; };
  double total = 0.0;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    total -= plogp(priors ? (*priors)[static_cast<std::size_t>(i)] : p.row(i).sum());
    for (Eigen::Index j = 0; j < p.cols(); ++j) total += plogp(p(i, j));
  }
  for (Eigen::Index j = 0; j < p.cols(); ++j) total -= plogp(p.col(j).sum());
  return total;
}

inline double mutual_information(const povm_forge::Ensemble& s, const povm_forge::Povm& p) {
  return information(joint(s, p.operators()));
}

// Rows: 1, diagonal entries, Re and Im of strictly lower entries.
inline RealMatrix design(const std::vector<povm_forge::HermitianMatrix>& ops) {
  const int d = ops.front().dim();
  RealMatrix a(1 + d * d, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t j = 0; j < ops.size(); ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    Eigen::Index row = 0;
    a(row++, col) = 1.0;
    for (int k = 0; k < d; ++k) a(row++, col) = ops[j](k, k).real();
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l < k; ++l) a(row++, col) = ops[j](k, l).real();
    }
    for (int k = 0; k < d; ++k) {
      for (int l = 0; l < k; ++l) a(row++, col) = ops[j](k, l).imag();
    }
  }
  return a;
}

struct BasicSolution {
  std::vector<std::size_t> support;
  RealVector x;  // full length
};

// Every nonnegative solution of A x = c supported on a linearly
// independent column subset, found by trying all subsets.
inline std::vector<BasicSolution> basic_solutions(const RealMatrix& a, const RealVector& c, double tol = 1e-9) {
  std::vector<BasicSolution> out;
  const auto n = static_cast<std::size_t>(a.cols());
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) cols.push_back(j);
    }
    RealMatrix sub(a.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) sub.col(static_cast<Eigen::Index>(k)) = a.col(static_cast<Eigen::Index>(cols[k]));
    if (rank(sub) != static_cast<int>(cols.size())) continue;
    const RealVector y = sub.colPivHouseholderQr().solve(c);
    if ((sub * y - c).norm() > 1e-8) continue;
    if (y.minCoeff() < tol) continue;  // strictly positive on its support
    BasicSolution b{cols, RealVector::Zero(static_cast<Eigen::Index>(n))};
    for (std::size_t k = 0; k < cols.size(); ++k) b.x(static_cast<Eigen::Index>(cols[k])) = y(static_cast<Eigen::Index>(k));
    out.push_back(std::move(b));
  }
  return out;
}

// Real dimension of the space of Hermitian (or, with real_only, real
// symmetric) matrices commuting with every given matrix.
inline int commutant_dimension(const std::vector<ComplexMatrix>& group, int d, bool real_only) {
  std::vector<ComplexMatrix> basis;
  for (int k = 0; k < d; ++k) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    e(k, k) = 1;
    basis.push_back(e);
  }
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < k; ++l) {
      ComplexMatrix x = ComplexMatrix::Zero(d, d);
      x(k, l) = x(l, k) = 1;
      basis.push_back(x);
      if (!real_only) {
        ComplexMatrix y = ComplexMatrix::Zero(d, d);
        y(k, l) = {0, 1};
        y(l, k) = {0, -1};
        basis.push_back(y);
      }
    }
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(group.size()) * d * d * 2;
  RealMatrix lin(rows, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    Eigen::Index r = 0;
    for (const auto& g : group) {
      const ComplexMatrix comm = g * basis[b] - basis[b] * g;
      for (Eigen::Index i = 0; i < comm.size(); ++i) {
        lin(r++, static_cast<Eigen::Index>(b)) = comm(i).real();
        lin(r++, static_cast<Eigen::Index>(b)) = comm(i).imag();
      }
    }
  }
  return static_cast<int>(basis.size()) - rank(lin);
}

}  // namespace oracle
