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

#include "povm_forge/trines.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <utility>

#include "povm_forge/errors.hpp"
#include "povm_forge/infotheory.hpp"

namespace povm_forge::trines {

namespace {

constexpr double kThird = 1.0 / 3.0;
constexpr double kGoldenTol = 1e-10;

/// Golden-section search for a maximum of f on [lo, hi].
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol = kGoldenTol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  // Keep the best of the final bracket, including its end points.
  std::pair<double, double> best{c, fc};
  if (fd > best.second) best = {d, fd};
  for (double e : {lo, hi}) {
    const double fe = f(e);
    if (fe > best.second) best = {e, fe};
  }
  return best;
}

double fold_b(double b) {
  b = std::fmod(b, kBPeriod);
  if (b < 0.0) b += kBPeriod;
  return std::min(b, kBPeriod - b);
}

double clamp_x(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

ComplexMatrix trine_rotation() {
  const double s3 = std::sqrt(3.0);
  Eigen::Matrix3d r;
  r << 2.0, 0.0, 0.0,  //
      0.0, -1.0, s3,   //
      0.0, -s3, -1.0;
  return (0.5 * r).cast<Complex>();
}

FiniteRep trine_group() {
  const std::array<ComplexMatrix, 1> gens{trine_rotation()};
  return generate_group(gens, 3);
}

std::array<Eigen::Vector3d, 3> lifted_trine_vectors(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw RangeError("lifting parameter must lie in [0, 1], got " + std::to_string(alpha));
  }
  const double up = std::sqrt(alpha);
  const double flat = std::sqrt(1.0 - alpha);
  const double h = std::sqrt(3.0) / 2.0;
  return {Eigen::Vector3d(up, flat, 0.0), Eigen::Vector3d(up, -0.5 * flat, h * flat),
          Eigen::Vector3d(up, -0.5 * flat, -h * flat)};
}

Ensemble lifted_trines(double alpha) {
  const auto vs = lifted_trine_vectors(alpha);
  std::vector<HermitianMatrix> states;
  for (const auto& v : vs) states.push_back(HermitianMatrix::projector(v.cast<Complex>()));
  return Ensemble(std::move(states), {kThird, kThird, kThird});
}

Eigen::Vector3d psi(double a, double b) {
  return {std::cos(a), std::sin(a) * std::cos(b), std::sin(a) * std::sin(b)};
}

std::vector<HermitianMatrix> trine_orbit(double a, double b) {
  const ComplexMatrix r = trine_rotation();
  const HermitianMatrix base = HermitianMatrix::projector(psi(a, b).cast<Complex>());
  return {base, base.conjugated_by(r), base.conjugated_by(r * r)};
}

LiftedTrinesModel::LiftedTrinesModel(double alpha) : alpha_(alpha), states_(lifted_trine_vectors(alpha)) {
  const Eigen::Matrix3d r = trine_rotation().real();
  rotations_ = {Eigen::Matrix3d::Identity(), r, r * r};
}

Eigen::Matrix3d LiftedTrinesModel::joint(double a, double b) const {
  const Eigen::Vector3d v = psi(a, b);
  Eigen::Matrix3d p;
  for (int j = 0; j < 3; ++j) {
    const Eigen::Vector3d w = rotations_[j] * v;
    for (int i = 0; i < 3; ++i) {
      const double overlap = states_[i].dot(w);
      p(i, j) = kThird * overlap * overlap;
    }
  }
  return p;
}

double LiftedTrinesModel::orbit_info(double a, double b) const {
  const Eigen::Matrix3d p = joint(a, b);
  double total = std::log2(3.0);  // −Σ_i H(1/3)
  for (int j = 0; j < 3; ++j) {
    double col = 0.0;
    for (int i = 0; i < 3; ++i) {
      total += entropy_term(p(i, j));
      col += p(i, j);
    }
    total -= entropy_term(col);
  }
  return total;
}

double orbit_info(double alpha, double a, double b) { return LiftedTrinesModel(alpha).orbit_info(a, b); }

std::vector<SurfacePoint> scan_surface(double alpha, int nx, int nb, unsigned threads) {
  if (nx < 2 || nb < 2) throw RangeError("scan grid needs at least 2 points per axis");
  const LiftedTrinesModel model(alpha);
  const std::size_t total = static_cast<std::size_t>(nx) * static_cast<std::size_t>(nb);
  std::vector<SurfacePoint> out(total);
  constexpr double kDerivStep = 1e-6;

  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const int ix = static_cast<int>(k / static_cast<std::size_t>(nb));
      const int ib = static_cast<int>(k % static_cast<std::size_t>(nb));
      const double x = static_cast<double>(ix) / (nx - 1);
      const double b = kBPeriod * static_cast<double>(ib) / (nb - 1);
      const double a = std::acos(std::sqrt(x));
      const double deriv =
          (model.orbit_info(a, b + kDerivStep) - model.orbit_info(a, b - kDerivStep)) / (2.0 * kDerivStep);
      out[k] = {x, b, model.orbit_info(a, b), deriv};
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    fill(0, total);
    return out;
  }
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin < end) workers.emplace_back(fill, begin, end);
    }
  }
  return out;
}

SingleOrbitOptimum maximize_over_b(const LiftedTrinesModel& model, double x, int grid) {
  if (grid < 2) throw RangeError("b grid needs at least 2 points");
  x = clamp_x(x);
  const double a = std::acos(std::sqrt(x));
  const double step = kBPeriod / grid;
  int best_k = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid; ++k) {
    const double v = model.orbit_info(a, k * step);
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  const double lo = std::max(0.0, (best_k - 1) * step);
  const double hi = std::min(kBPeriod, (best_k + 1) * step);
  auto [b, info] = golden_max([&](double bb) { return model.orbit_info(a, bb); }, lo, hi);
  if (best > info) {
    b = best_k * step;
    info = best;
  }
  return {{a, fold_b(b)}, info};
}

SingleOrbitOptimum optimize_single_orbit(double alpha, int grid) {
  return maximize_over_b(LiftedTrinesModel(alpha), kThird, grid);
}

double mixing_weight(double x1, double x2) {
  if (x2 - x1 <= 0.0) return 1.0;
  return std::clamp((x2 - kThird) / (x2 - x1), 0.0, 1.0);
}

TwoOrbitSolution optimize_two_orbits(double alpha, const TwoOrbitOptions& options) {
  const LiftedTrinesModel model(alpha);
  auto best_b = [&](double x) { return maximize_over_b(model, x, options.b_grid); };
  auto combined = [](double lambda, const SingleOrbitOptimum& lo, const SingleOrbitOptimum& hi) {
    return lambda * lo.info_bits + (1.0 - lambda) * hi.info_bits;
  };

  const int n1 = std::max(2, options.x1_grid);
  const int n2 = std::max(2, options.x2_grid);
  std::vector<double> xs1(n1), xs2(n2);
  std::vector<SingleOrbitOptimum> g1, g2;
  for (int k = 0; k < n1; ++k) {
    xs1[k] = kThird * k / (n1 - 1);
    g1.push_back(best_b(xs1[k]));
  }
  for (int k = 0; k < n2; ++k) {
    xs2[k] = kThird + (1.0 - kThird) * k / (n2 - 1);
    g2.push_back(best_b(xs2[k]));
  }

  struct Seed {
    int i, j;
    double value;
  };
  std::vector<Seed> grid;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) grid.push_back({i, j, combined(mixing_weight(xs1[i], xs2[j]), g1[i], g2[j])});
  }
  std::stable_sort(grid.begin(), grid.end(), [](const Seed& l, const Seed& r) { return l.value > r.value; });

  const double h1 = kThird / (n1 - 1);
  const double h2 = (1.0 - kThird) / (n2 - 1);
  TwoOrbitSolution best{};
  best.info_bits = -std::numeric_limits<double>::infinity();
  const int seeds = std::min<int>(options.seeds, static_cast<int>(grid.size()));
  for (int s = 0; s < seeds; ++s) {
    double x1 = xs1[grid[s].i];
    double x2 = xs2[grid[s].j];
    SingleOrbitOptimum o1 = g1[grid[s].i];
    SingleOrbitOptimum o2 = g2[grid[s].j];
    double value = grid[s].value;
    for (int sweep = 0; sweep < options.sweeps; ++sweep) {
      {
        const auto [nx1, v] = golden_max(
            [&](double t) { return combined(mixing_weight(t, x2), best_b(t), o2); }, std::max(0.0, x1 - h1),
            std::min(kThird, x1 + h1));
        if (v > value) {
          x1 = nx1;
          value = v;
          o1 = best_b(x1);
        }
      }
      {
        const auto [nx2, v] = golden_max(
            [&](double t) { return combined(mixing_weight(x1, t), o1, best_b(t)); }, std::max(kThird, x2 - h2),
            std::min(1.0, x2 + h2));
        if (v > value) {
          x2 = nx2;
          value = v;
          o2 = best_b(x2);
        }
      }
    }
    if (value > best.info_bits) best = {o1.params, o2.params, mixing_weight(x1, x2), value};
  }
  return best;
}

ComplexMatrix double_trines_basis_change() {
  Eigen::Matrix4d u;
  u << 1, 0, 0, 1,   //
      1, 0, 0, -1,   //
      0, 1, 1, 0,    //
      0, 1, -1, 0;
  return (u / std::sqrt(2.0)).cast<Complex>();
}

DoubleTrines double_trines() {
  const double s3 = std::sqrt(3.0);
  const std::array<Eigen::Vector2d, 3> qubit{Eigen::Vector2d(1.0, 0.0), Eigen::Vector2d(-0.5, -0.5 * s3),
                                             Eigen::Vector2d(-0.5, 0.5 * s3)};
  const ComplexMatrix u = double_trines_basis_change();
  std::vector<ComplexVector> raw_kets;
  std::vector<ComplexVector> projected_kets;
  for (const auto& q : qubit) {
    Eigen::Vector4d product;
    product << q[0] * q[0], q[0] * q[1], q[1] * q[0], q[1] * q[1];
    const ComplexVector ket = product.cast<Complex>();
    raw_kets.push_back(ket);
    const ComplexVector rotated = u * ket;
    if (std::abs(rotated[3]) > 1e-12) throw Error("double trines: dropped component is not zero");
    projected_kets.push_back(rotated.head(3));
  }
  return {Ensemble::from_kets(raw_kets, {kThird, kThird, kThird}),
          Ensemble::from_kets(projected_kets, {kThird, kThird, kThird})};
}

namespace {

double double_trines_gamma() {
  const double t = 3.0 + 2.0 * std::numbers::sqrt2;
  return std::log(2.0 * t * t);
}

}  // namespace

double double_trines_closed_form() {
  const double gamma = double_trines_gamma();
  return (2.0 * std::numbers::sqrt2 * gamma - 9.0 * std::numbers::ln2) / (6.0 * std::numbers::ln2);
}

Eigen::Vector2d double_trines_hessian_closed_form() {
  const double gamma = double_trines_gamma();
  return {(81.0 - 27.0 * std::numbers::sqrt2 * gamma) / (16.0 * std::numbers::ln2),
          (6.0 - (2.0 + std::numbers::sqrt2) * gamma) / (3.0 * std::numbers::ln2)};
}

Eigen::Matrix2d hessian_at(double alpha, double x, double b, double h) {
  if (!(h > 0.0)) throw RangeError("finite-difference step must be positive");
  if (x - h < 0.0 || x + h > 1.0) throw RangeError("Hessian point must be interior in x");
  const LiftedTrinesModel model(alpha);
  auto f = [&](double xx, double bb) { return model.orbit_info_x(xx, bb); };
  const double f0 = f(x, b);
  const double fxx = (f(x + h, b) - 2.0 * f0 + f(x - h, b)) / (h * h);
  const double fbb = (f(x, b + h) - 2.0 * f0 + f(x, b - h)) / (h * h);
  const double fxb = (f(x + h, b + h) - f(x + h, b - h) - f(x - h, b + h) + f(x - h, b - h)) / (4.0 * h * h);
  Eigen::Matrix2d hess;
  hess << fxx, fxb, fxb, fbb;
  return hess;
}

RankArgumentReport single_orbit_rank_argument(const Ensemble& ensemble, const TwoOrbitSolution& optimum) {
  const auto p = trine_orbit(optimum.first.a, optimum.first.b);
  const auto q = trine_orbit(optimum.second.a, optimum.second.b);
  const JointDistribution jp = joint_distribution(ensemble, p);
  const JointDistribution jq = joint_distribution(ensemble, q);
  bool proportional = true;
  for (std::size_t j = 0; j < p.size(); ++j) proportional = proportional && equality_condition(ensemble, p, q, j);
  return {optimum.first,
          optimum.second,
          jp.p.col(0),
          jq.p.col(0),
          orbit_information(ensemble, p),
          orbit_information(ensemble, q),
          proportional,
          !proportional};
}

RankArgumentReport single_orbit_rank_argument(double alpha) {
  return single_orbit_rank_argument(lifted_trines(alpha), optimize_two_orbits(alpha));
}

}  // namespace povm_forge::trines
