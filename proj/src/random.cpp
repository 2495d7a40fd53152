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

#include "povm_forge/random.hpp"

#include <algorithm>
#include <vector>

#include "povm_forge/errors.hpp"

namespace povm_forge::random {

ComplexMatrix gaussian_matrix(Rng& rng, int rows, int cols, bool real) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) g(r, c) = Complex(normal(rng), real ? 0.0 : normal(rng));
  }
  return g;
}

HermitianMatrix hermitian(Rng& rng, int d, bool real) {
  const ComplexMatrix g = gaussian_matrix(rng, d, d, real);
  return HermitianMatrix((g + g.adjoint()) * 0.5);
}

HermitianMatrix psd(Rng& rng, int d, int rank, bool real) {
  const ComplexMatrix g = gaussian_matrix(rng, d, rank, real);
  return HermitianMatrix(g * g.adjoint(), 1e-6);
}

ComplexVector unit_vector(Rng& rng, int d, bool real) {
  const ComplexMatrix g = gaussian_matrix(rng, d, 1, real);
  return g.col(0) / g.col(0).norm();
}

HermitianMatrix density_matrix(Rng& rng, int d, int rank, bool real) {
  const HermitianMatrix a = psd(rng, d, rank, real);
  return (1.0 / a.trace()) * a;
}

Povm povm(Rng& rng, int d, std::size_t n, int rank, bool real) {
  if (n == 0) throw DimensionError("random POVM needs at least one operator");
  if (n * static_cast<std::size_t>(std::min(rank, d)) < static_cast<std::size_t>(d)) {
    throw DimensionError("random POVM: n * rank must be at least d");
  }
  std::vector<HermitianMatrix> parts;
  HermitianMatrix total = HermitianMatrix::zero(d);
  for (std::size_t k = 0; k < n; ++k) {
    parts.push_back(psd(rng, d, rank, real));
    total += parts.back();
  }
  const HermitianMatrix s = inv_sqrt_psd(total);
  std::vector<HermitianMatrix> ops;
  for (const auto& a : parts) ops.emplace_back(s.matrix() * a.matrix() * s.matrix(), 1e-6);
  return Povm(std::move(ops));
}

namespace {

std::vector<double> dirichlet(Rng& rng, std::size_t m) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(m);
  double total = 0.0;
  for (auto& v : w) {
    v = expo(rng) + 1e-3;
    total += v;
  }
  for (auto& v : w) v /= total;
  return w;
}

}  // namespace

Ensemble ensemble(Rng& rng, int d, std::size_t m, int rank, bool real) {
  std::vector<HermitianMatrix> states;
  for (std::size_t i = 0; i < m; ++i) states.push_back(density_matrix(rng, d, rank, real));
  return Ensemble(std::move(states), dirichlet(rng, m));
}

Ensemble symmetric_ensemble(Rng& rng, const FiniteRep& rep, std::size_t m, int rank, bool real) {
  const std::vector<double> orbit_weights = dirichlet(rng, m);
  std::vector<HermitianMatrix> states;
  std::vector<double> priors;
  for (std::size_t i = 0; i < m; ++i) {
    const HermitianMatrix seed = density_matrix(rng, rep.dim(), rank, real);
    const Orbit orbit = make_orbit(seed, rep);
    const double share = orbit_weights[i] / static_cast<double>(orbit.elements.size());
    for (const auto& e : orbit.elements) {
      states.push_back((1.0 / e.trace()) * e);
      priors.push_back(share);
    }
  }
  return Ensemble(std::move(states), std::move(priors));
}

}  // namespace povm_forge::random
