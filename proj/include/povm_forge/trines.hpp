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

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "povm_forge/hermitian.hpp"
#include "povm_forge/quantum.hpp"
#include "povm_forge/symmetry.hpp"

namespace povm_forge::trines {

/// Period of the orbit information in b.
inline constexpr double kBPeriod = 2.0 * std::numbers::pi / 3.0;

/// The 120° rotation about the first axis, as a real orthogonal 3×3 matrix.
ComplexMatrix trine_rotation();
/// C3 generated by trine_rotation().
FiniteRep trine_group();

/// Three unit vectors (√α, √(1−α)cos θ_k, √(1−α)sin θ_k), θ_k = 0, 2π/3,
/// 4π/3, as rank-one states with uniform priors. Throws RangeError unless
/// 0 ≤ α ≤ 1.
Ensemble lifted_trines(double alpha);
std::array<Eigen::Vector3d, 3> lifted_trine_vectors(double alpha);

/// (cos a, sin a cos b, sin a sin b)
Eigen::Vector3d psi(double a, double b);

/// Point of the orbit parameter plane. x = cos²(a).
struct OrbitParams {
  double a = 0.0;
  double b = 0.0;

  double x() const { return std::cos(a) * std::cos(a); }
  static OrbitParams from_x(double x, double b) { return {std::acos(std::sqrt(x)), b}; }
};

/// R^j |Ψ(a,b)⟩⟨Ψ(a,b)| R^{-j}, j = 0, 1, 2. Sums to I_3 only when
/// cos²(a) = 1/3.
std::vector<HermitianMatrix> trine_orbit(double a, double b);

/// Fast evaluator of the orbit information for a fixed lifted-trines
/// ensemble, working directly on the real state vectors.
class LiftedTrinesModel {
 public:
  explicit LiftedTrinesModel(double alpha);

  double alpha() const { return alpha_; }
  /// Formal information of the orbit of |Ψ(a,b)⟩⟨Ψ(a,b)|, in bits.
  double orbit_info(double a, double b) const;
  double orbit_info_x(double x, double b) const { return orbit_info(std::acos(std::sqrt(x)), b); }
  /// Joint distribution p_ij = (1/3)|⟨ψ_i|R^j Ψ(a,b)⟩|².
  Eigen::Matrix3d joint(double a, double b) const;

 private:
  double alpha_;
  std::array<Eigen::Vector3d, 3> states_;
  std::array<Eigen::Matrix3d, 3> rotations_;
};

/// orbit_info of the lifted trines with parameter α, in bits.
double orbit_info(double alpha, double a, double b);

struct SurfacePoint {
  double x;
  double b;
  double info_bits;
  double dinfo_db;  // central difference in b
};

/// Uniform nx × nb grid over x ∈ [0,1], b ∈ [0, 2π/3], x-major. `threads`
/// of 0 uses the hardware concurrency.
std::vector<SurfacePoint> scan_surface(double alpha, int nx, int nb, unsigned threads = 1);

struct SingleOrbitOptimum {
  OrbitParams params;
  double info_bits;
};

/// Maximizes the information on the plane x = 1/3 over b: uniform grid then
/// golden-section refinement. The reported b is folded into [0, π/3] using
/// the reflection symmetry I(b) = I(2π/3 − b).
SingleOrbitOptimum optimize_single_orbit(double alpha, int grid = 512);

/// max over b of the information at fixed x (same grid + golden search).
SingleOrbitOptimum maximize_over_b(const LiftedTrinesModel& model, double x, int grid);

struct TwoOrbitSolution {
  OrbitParams first;   // x ∈ [0, 1/3]
  OrbitParams second;  // x ∈ [1/3, 1]
  double lambda;
  double info_bits;
};

/// λ with λ x1 + (1−λ) x2 = 1/3. Returns 1 when x1 = x2 = 1/3.
double mixing_weight(double x1, double x2);

struct TwoOrbitOptions {
  int b_grid = 128;
  int x1_grid = 33;
  int x2_grid = 65;
  int seeds = 8;
  int sweeps = 3;
};

/// Best convex combination of two orbits on opposite sides of x = 1/3.
TwoOrbitSolution optimize_two_orbits(double alpha, const TwoOrbitOptions& options = {});

struct DoubleTrines {
  Ensemble raw;        // two-qubit product states, d = 4
  Ensemble projected;  // after the basis change, last component dropped
};

/// The 4×4 orthogonal basis change taking the double trines to lifted
/// trines padded with a zero component.
ComplexMatrix double_trines_basis_change();
DoubleTrines double_trines();

/// (2√2γ − 9 ln 2)/(6 ln 2) with γ = ln(2(3 + 2√2)²).
double double_trines_closed_form();

/// Central-difference Hessian of (x, b) ↦ I(arccos√x, b).
Eigen::Matrix2d hessian_at(double alpha, double x, double b, double h = 1e-4);

/// Closed-form Hessian diagonal of the double trines at (1/3, 0).
Eigen::Vector2d double_trines_hessian_closed_form();

struct RankArgumentReport {
  OrbitParams first;
  OrbitParams second;
  Eigen::Vector3d first_vector;   // column 0 of the joint distribution
  Eigen::Vector3d second_vector;
  double first_info;
  double second_info;
  bool proportional;  // equality condition holds on every column
  bool strict;        // the mixture inequality is strict
};

/// Shows numerically that no single orbit can be optimal: compares the
/// probability vectors of the two optimal rank-one orbits.
RankArgumentReport single_orbit_rank_argument(const Ensemble& ensemble, const TwoOrbitSolution& optimum);
RankArgumentReport single_orbit_rank_argument(double alpha = 1.0 / 20.0);

}  // namespace povm_forge::trines
