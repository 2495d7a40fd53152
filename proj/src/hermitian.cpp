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

#include "povm_forge/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "povm_forge/errors.hpp"

namespace povm_forge {

namespace {

void require_finite(const ComplexMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) {
        throw Error("matrix has a non-finite entry");
      }
    }
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m, double herm_tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("Hermitian matrix must be square and non-empty, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  require_finite(m);
  const double defect = max_abs_diff(m, m.adjoint());
  if (defect > herm_tol) {
    throw HermiticityError("matrix is not Hermitian: max|M - M^dagger| = " + std::to_string(defect));
  }
  m_ = (m + m.adjoint()) * 0.5;
}

HermitianMatrix HermitianMatrix::identity(int d) {
  if (d <= 0) throw DimensionError("dimension must be positive");
  return HermitianMatrix(ComplexMatrix::Identity(d, d), Unchecked{});
}

HermitianMatrix HermitianMatrix::zero(int d) {
  if (d <= 0) throw DimensionError("dimension must be positive");
  return HermitianMatrix(ComplexMatrix::Zero(d, d), Unchecked{});
}

HermitianMatrix HermitianMatrix::projector(const ComplexVector& v) {
  if (v.size() == 0) throw DimensionError("empty vector");
  ComplexMatrix p = v * v.adjoint();
  return HermitianMatrix(p);
}

double HermitianMatrix::trace() const { return m_.trace().real(); }

double HermitianMatrix::max_norm() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }

bool HermitianMatrix::is_real(double tol) const {
  return m_.size() == 0 || m_.imag().cwiseAbs().maxCoeff() <= tol;
}

HermitianMatrix HermitianMatrix::conjugated_by(const ComplexMatrix& u) const {
  if (u.rows() != m_.rows() || u.cols() != m_.cols()) {
    throw DimensionError("conjugating unitary has wrong dimension");
  }
  ComplexMatrix r = u * m_ * u.adjoint();
  return HermitianMatrix((r + r.adjoint()) * 0.5, Unchecked{});
}

HermitianMatrix HermitianMatrix::real_part() const {
  return HermitianMatrix(m_.real().cast<Complex>(), Unchecked{});
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& other) {
  if (other.dim() != dim()) throw DimensionError("dimension mismatch in matrix sum");
  m_ += other.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& other) {
  if (other.dim() != dim()) throw DimensionError("dimension mismatch in matrix difference");
  m_ -= other.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

HermitianBasis::HermitianBasis(int d) : dim_(d) {
  if (d < 1) throw DimensionError("Hermitian basis needs d >= 1, got " + std::to_string(d));
  elements_.reserve(static_cast<std::size_t>(d) * d);
  for (int k = 0; k < d; ++k) {
    ComplexMatrix e = ComplexMatrix::Zero(d, d);
    e(k, k) = 1.0;
    elements_.emplace_back(e);
  }
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < k; ++l) {
      ComplexMatrix x = ComplexMatrix::Zero(d, d);
      x(k, l) = 1.0;
      x(l, k) = 1.0;
      elements_.emplace_back(x);
    }
  }
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < k; ++l) {
      ComplexMatrix y = ComplexMatrix::Zero(d, d);
      y(k, l) = Complex(0.0, 1.0);
      y(l, k) = Complex(0.0, -1.0);
      elements_.emplace_back(y);
    }
  }
}

HermitianMatrix HermitianBasis::reconstruct(const RealVector& coeffs) const {
  if (static_cast<std::size_t>(coeffs.size()) != elements_.size()) {
    throw DimensionError("coefficient vector length does not match basis size");
  }
  HermitianMatrix out = HermitianMatrix::zero(dim_);
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    out += coeffs[static_cast<Eigen::Index>(a)] * elements_[a];
  }
  return out;
}

HermitianBasis hermitian_basis(int d) { return HermitianBasis(d); }

RealVector coords(const HermitianMatrix& m) {
  const int d = m.dim();
  const int off = d * (d - 1) / 2;
  RealVector c(d * d);
  for (int k = 0; k < d; ++k) c[k] = m(k, k).real();
  int idx = 0;
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < k; ++l, ++idx) {
      c[d + idx] = m(k, l).real();
      c[d + off + idx] = m(k, l).imag();
    }
  }
  return c;
}

RealVector coords(const ComplexMatrix& m, double herm_tol) { return coords(HermitianMatrix(m, herm_tol)); }

EigenDecomposition eig_hermitian(const HermitianMatrix& m) {
  const int n = m.dim();
  ComplexMatrix a = m.matrix();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  const double scale = std::max(1.0, a.norm());
  const double threshold = 1e-14 * scale;
  auto off_diagonal_mass = [&]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        if (p != q) s += std::norm(a(p, q));
      }
    }
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_mass() > threshold; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        // Phase D = diag(1, e^{-iφ}) makes the (p,q) entry real; the real
        // rotation then annihilates it. U = D·[[c, s], [-s, c]].
        const Complex phase = std::conj(a(p, q)) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex u00 = c;
        const Complex u01 = s;
        const Complex u10 = -s * phase;
        const Complex u11 = c * phase;

        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * u00 + akq * u10;
          a(k, q) = akp * u01 + akq * u11;
        }
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
          a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * u00 + vkq * u10;
          v(k, q) = vkp * u01 + vkq * u11;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]).real();
    out.vectors.col(i) = v.col(order[i]);
  }
  return out;
}

double min_eigenvalue(const HermitianMatrix& m) { return eig_hermitian(m).values[0]; }

bool is_psd(const HermitianMatrix& m, double tol) { return min_eigenvalue(m) >= -tol; }

HermitianMatrix spectral_map(const EigenDecomposition& e, const std::function<double(double)>& f) {
  const Eigen::Index n = e.values.size();
  RealVector fv(n);
  for (Eigen::Index i = 0; i < n; ++i) fv[i] = f(e.values[i]);
  ComplexMatrix r = e.vectors * fv.cast<Complex>().asDiagonal() * e.vectors.adjoint();
  return HermitianMatrix((r + r.adjoint()) * 0.5);
}

namespace {

double null_cutoff(const EigenDecomposition& e, double null_tol) {
  const double largest = e.values.size() ? std::max(e.values.maxCoeff(), 0.0) : 0.0;
  return null_tol * largest;
}

void require_psd(const EigenDecomposition& e) {
  const double largest = std::max(1.0, e.values.cwiseAbs().maxCoeff());
  if (e.values[0] < -kPsdTol * largest) {
    throw PositivityError("matrix is not positive semidefinite: min eigenvalue " + std::to_string(e.values[0]));
  }
}

}  // namespace

HermitianMatrix inv_sqrt_psd(const HermitianMatrix& m, double null_tol) {
  const auto e = eig_hermitian(m);
  require_psd(e);
  const double cut = null_cutoff(e, null_tol);
  return spectral_map(e, [cut](double lam) { return lam > cut ? 1.0 / std::sqrt(lam) : 0.0; });
}

HermitianMatrix support_projector(const HermitianMatrix& m, double null_tol) {
  const auto e = eig_hermitian(m);
  require_psd(e);
  const double cut = null_cutoff(e, null_tol);
  return spectral_map(e, [cut](double lam) { return lam > cut ? 1.0 : 0.0; });
}

std::vector<HermitianMatrix> rank_one_pieces(const HermitianMatrix& m, double cutoff) {
  const auto e = eig_hermitian(m);
  std::vector<HermitianMatrix> pieces;
  for (Eigen::Index k = e.values.size() - 1; k >= 0; --k) {
    if (e.values[k] > cutoff) {
      pieces.push_back(e.values[k] * HermitianMatrix::projector(e.vectors.col(k)));
    }
  }
  return pieces;
}

int spectral_rank(const HermitianMatrix& m, double null_tol) {
  const auto e = eig_hermitian(m);
  const double cut = std::max(null_cutoff(e, null_tol), 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < e.values.size(); ++i) {
    if (e.values[i] > cut) ++rank;
  }
  return rank;
}

}  // namespace povm_forge
