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

#include "povm_forge/symmetry.hpp"

#include <cmath>
#include <deque>
#include <string>

#include "povm_forge/errors.hpp"

namespace povm_forge {

namespace {

int nearest_integer_or_throw(double value, const char* what) {
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > 1e-6) {
    throw GroupError(std::string(what) + " character sum " + std::to_string(value) +
                     " is not an integer; the element list is not a closed group");
  }
  return static_cast<int>(rounded);
}

void require_dim(int expected, int got) {
  if (expected != got) {
    throw DimensionError("representation has dimension " + std::to_string(expected) + ", operand has " +
                         std::to_string(got));
  }
}

}  // namespace

std::optional<std::size_t> FiniteRep::find(const ComplexMatrix& m, double tol) const {
  for (std::size_t g = 0; g < elements_.size(); ++g) {
    if (max_abs_diff(elements_[g], m) <= tol) return g;
  }
  return std::nullopt;
}

bool FiniteRep::is_real(double tol) const {
  for (const auto& e : elements_) {
    if (e.imag().cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

FiniteRep FiniteRep::trivial(int d) { return generate_group({}, d); }

FiniteRep generate_group(std::span<const ComplexMatrix> generators, int dim, std::size_t max_order) {
  if (!generators.empty()) dim = static_cast<int>(generators.front().rows());
  if (dim <= 0) throw DimensionError("group representation needs a positive dimension");
  const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& g = generators[k];
    if (g.rows() != dim || g.cols() != dim) {
      throw DimensionError("generator " + std::to_string(k) + " has the wrong shape");
    }
    if (max_abs_diff(g.adjoint() * g, id) > kUnitarityTol) {
      throw UnitarityError("generator " + std::to_string(k) + " is not unitary");
    }
  }

  FiniteRep rep;
  rep.dim_ = dim;
  rep.elements_.push_back(id);
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t current = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      ComplexMatrix product = g * rep.elements_[current];
      if (rep.find(product)) continue;
      if (rep.elements_.size() >= max_order) {
        throw GroupError("group closure exceeded " + std::to_string(max_order) +
                         " elements; the generators may define an infinite group or a projective "
                         "representation (supply a central extension explicitly)");
      }
      rep.elements_.push_back(std::move(product));
      frontier.push_back(rep.elements_.size() - 1);
    }
  }
  return rep;
}

Orbit make_orbit(const HermitianMatrix& base, const FiniteRep& rep, double dedup_tol) {
  require_dim(rep.dim(), base.dim());
  std::vector<HermitianMatrix> conjugates;
  std::vector<int> counts;
  for (const auto& g : rep.elements()) {
    HermitianMatrix image = base.conjugated_by(g);
    bool merged = false;
    for (std::size_t k = 0; k < conjugates.size() && !merged; ++k) {
      if (max_abs_diff(conjugates[k].matrix(), image.matrix()) <= dedup_tol) {
        ++counts[k];
        merged = true;
      }
    }
    if (!merged) {
      conjugates.push_back(std::move(image));
      counts.push_back(1);
    }
  }
  const double w = 1.0 / static_cast<double>(rep.order());
  Orbit orbit{base, {}};
  for (std::size_t k = 0; k < conjugates.size(); ++k) {
    orbit.elements.push_back((w * counts[k]) * conjugates[k]);
  }
  return orbit;
}

Povm symmetrize(const Povm& p, const FiniteRep& rep) {
  require_dim(rep.dim(), p.dim());
  const double w = 1.0 / static_cast<double>(rep.order());
  std::vector<HermitianMatrix> ops;
  ops.reserve(p.size() * rep.order());
  for (const auto& op : p.operators()) {
    for (const auto& g : rep.elements()) ops.push_back(w * op.conjugated_by(g));
  }
  return Povm(std::move(ops));
}

HermitianMatrix orbit_sum(const HermitianMatrix& op, const FiniteRep& rep) {
  require_dim(rep.dim(), op.dim());
  HermitianMatrix total = HermitianMatrix::zero(op.dim());
  for (const auto& g : rep.elements()) total += op.conjugated_by(g);
  return (1.0 / static_cast<double>(rep.order())) * total;
}

int complex_orbit_bound(const FiniteRep& rep) {
  double s = 0.0;
  for (const auto& g : rep.elements()) s += std::norm(g.trace());
  return nearest_integer_or_throw(s / static_cast<double>(rep.order()), "complex");
}

int real_orbit_bound(const FiniteRep& rep) {
  if (!rep.is_real()) {
    throw GroupError("the real orbit bound requires a real orthogonal representation");
  }
  double s = 0.0;
  for (const auto& g : rep.elements()) {
    const double chi = g.trace().real();
    const double chi_sq = (g * g).trace().real();
    s += 0.5 * (chi * chi + chi_sq);
  }
  return nearest_integer_or_throw(s / static_cast<double>(rep.order()), "real");
}

bool is_symmetric_ensemble(const Ensemble& s, const FiniteRep& rep, double tol) {
  if (rep.dim() != s.dim()) return false;
  for (const auto& g : rep.elements()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      const ComplexMatrix image = s.state(i).conjugated_by(g).matrix();
      bool found = false;
      for (std::size_t j = 0; j < s.size() && !found; ++j) {
        found = max_abs_diff(image, s.state(j).matrix()) <= tol && std::abs(s.prior(i) - s.prior(j)) <= tol;
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace povm_forge
