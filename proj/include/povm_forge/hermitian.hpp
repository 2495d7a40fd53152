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

#include <complex>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace povm_forge {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermTol = 1e-9;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kNullTol = 1e-9;

/// Complex square matrix that is exactly Hermitian.
///
/// Construction checks ‖M − M†‖_max ≤ herm_tol and then stores (M + M†)/2,
/// so every instance is Hermitian to the last bit.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const ComplexMatrix& m, double herm_tol = kHermTol);

  static HermitianMatrix identity(int d);
  static HermitianMatrix zero(int d);
  /// |v⟩⟨v|
  static HermitianMatrix projector(const ComplexVector& v);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  double trace() const;
  double max_norm() const;
  bool is_real(double tol = kHermTol) const;

  /// U M U†
  HermitianMatrix conjugated_by(const ComplexMatrix& u) const;
  HermitianMatrix real_part() const;

  HermitianMatrix& operator+=(const HermitianMatrix& other);
  HermitianMatrix& operator-=(const HermitianMatrix& other);
  HermitianMatrix& operator*=(double s);

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }

 private:
  struct Unchecked {};
  HermitianMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// Largest |entry| of a − b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ordered trace-orthogonal basis of the real space of d×d Hermitian matrices.
///
/// Order: E_kk for k = 0..d−1, then X_kl = |k⟩⟨l| + |l⟩⟨k| for k > l, then
/// Y_kl = i|k⟩⟨l| − i|l⟩⟨k| for k > l, both in lexicographic (k, l) order.
class HermitianBasis {
 public:
  explicit HermitianBasis(int d);

  int dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<HermitianMatrix>& elements() const { return elements_; }
  const HermitianMatrix& operator[](std::size_t i) const { return elements_[i]; }

  /// Σ c_a B_a
  HermitianMatrix reconstruct(const RealVector& coeffs) const;

 private:
  int dim_;
  std::vector<HermitianMatrix> elements_;
};

HermitianBasis hermitian_basis(int d);

/// Basis coefficients of M: diagonal, then Re(M_kl), then Im(M_kl) for k > l.
RealVector coords(const HermitianMatrix& m);
/// Checked variant for raw input; throws HermiticityError.
RealVector coords(const ComplexMatrix& m, double herm_tol = kHermTol);

struct EigenDecomposition {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns are orthonormal eigenvectors
};

/// Cyclic complex Jacobi rotations; stops once the off-diagonal Frobenius
/// mass falls to 1e-14 (scaled by ‖M‖_F when that exceeds one).
EigenDecomposition eig_hermitian(const HermitianMatrix& m);

double min_eigenvalue(const HermitianMatrix& m);
bool is_psd(const HermitianMatrix& m, double tol = kPsdTol);

/// V f(Λ) V†
HermitianMatrix spectral_map(const EigenDecomposition& e, const std::function<double(double)>& f);

/// Pseudo-inverse square root. Eigenvalues at or below null_tol·λ_max are
/// treated as zero. Throws PositivityError if M has a negative eigenvalue
/// beyond the PSD tolerance.
HermitianMatrix inv_sqrt_psd(const HermitianMatrix& m, double null_tol = kNullTol);

/// Orthogonal projector onto the range of a PSD matrix.
HermitianMatrix support_projector(const HermitianMatrix& m, double null_tol = kNullTol);

/// Eigenvalue-weighted rank-one pieces λ_k |v_k⟩⟨v_k| with λ_k > cutoff.
std::vector<HermitianMatrix> rank_one_pieces(const HermitianMatrix& m, double cutoff = 1e-12);

/// Number of eigenvalues above null_tol·λ_max.
int spectral_rank(const HermitianMatrix& m, double null_tol = kNullTol);

}  // namespace povm_forge
