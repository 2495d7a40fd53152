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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "povm_forge/errors.hpp"
#include "povm_forge/infotheory.hpp"
#include "povm_forge/random.hpp"
#include "povm_forge/symmetry.hpp"
#include "povm_forge/trines.hpp"

namespace povm_forge {
namespace {

HermitianMatrix proj2(double a, double b) {
  ComplexVector v(2);
  v << a, b;
  return HermitianMatrix::projector(v);
}

Povm four_projectors() {
  const double s = 1 / std::numbers::sqrt2;
  return Povm({0.5 * proj2(1, 0), 0.5 * proj2(0, 1), 0.5 * proj2(s, s), 0.5 * proj2(s, -s)});
}

std::vector<HermitianMatrix> trine_orbit_sums(const std::vector<double>& xs) {
  std::vector<HermitianMatrix> sums;
  const FiniteRep g = trines::trine_group();
  for (double x : xs) {
    const auto p = trines::OrbitParams::from_x(x, 0.4);
    sums.push_back(orbit_sum(3.0 * HermitianMatrix::projector(trines::psi(p.a, p.b).cast<Complex>()), g));
  }
  return sums;
}

// Every leaf must coincide with a basic solution found by the subset oracle.
void expect_leaves_are_basic(const NormalizedPovm& n, const IdentityDecomposition& dec) {
  const RealMatrix a = oracle::design(n.normalized_ops);
  RealVector c = RealVector::Zero(a.rows());
  c.head(1 + n.dim()).setOnes();
  const auto basic = oracle::basic_solutions(a, c);
  const int r = oracle::rank(a);
  for (const auto& nu : dec.solutions) {
    EXPECT_LE(support_of(nu).size(), static_cast<std::size_t>(r));
    EXPECT_LE((a * nu - c).cwiseAbs().maxCoeff(), 1e-8);
    bool found = false;
    for (const auto& b : basic) found = found || (b.x - nu).cwiseAbs().maxCoeff() <= 1e-8;
    EXPECT_TRUE(found);
  }
}

TEST(DesignMatrixTest, IdentityColumn) {
  const std::vector<HermitianMatrix> ops{HermitianMatrix::identity(2)};
  const DesignMatrix dm = build_design_matrix(ops);
  EXPECT_EQ(dm.matrix.col(0), (RealVector(5) << 1, 1, 1, 0, 0).finished());
  EXPECT_EQ(dm.target, (RealVector(5) << 1, 1, 1, 0, 0).finished());
  EXPECT_EQ(dm.matrix, oracle::design(ops));
}

TEST(DesignMatrixTest, DiagonalBlock) {
  const DesignMatrix dm = build_design_matrix(std::vector<HermitianMatrix>{2.0 * proj2(1, 0), 2.0 * proj2(0, 1)});
  EXPECT_EQ(dm.matrix.block(1, 0, 2, 2), (Eigen::Matrix2d{{2, 0}, {0, 2}}));
}

TEST(DesignMatrixTest, RejectsWrongTrace) {
  EXPECT_THROW(build_design_matrix(std::vector<HermitianMatrix>{proj2(1, 0)}), DegenerateOperatorError);
}

TEST(DesignMatrixTest, TrineOrbitSumsHaveRankTwo) {
  const auto sums = trine_orbit_sums({0.0, 1.0 / 3.0, 2.0 / 3.0});
  const DesignMatrix dm = build_design_matrix(sums);
  EXPECT_EQ(numeric_rank(dm.matrix), 2);
  EXPECT_EQ(oracle::rank(dm.matrix), 2);
  // The three members of one orbit, without summing, are independent.
  const auto orbit = trines::trine_orbit(0.9, 0.4);
  std::vector<HermitianMatrix> scaled;
  for (const auto& op : orbit) scaled.push_back(3.0 * op);
  EXPECT_EQ(numeric_rank(build_design_matrix(scaled).matrix), 3);
}

TEST(NumericRankTest, Basics) {
  EXPECT_EQ(numeric_rank(RealMatrix::Zero(3, 4)), 0);
  EXPECT_EQ(numeric_rank(RealMatrix::Identity(4, 4)), 4);
  random::Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const RealMatrix a = random::gaussian_matrix(rng, 6, 3, true).real() *
                         random::gaussian_matrix(rng, 3, 7, true).real();
    EXPECT_EQ(numeric_rank(a), 3);
    EXPECT_EQ(numeric_rank(a), oracle::rank(a));
  }
}

TEST(DecomposeIdentityTest, SingleIdentity) {
  const IdentityDecomposition dec = decompose_identity(normalize_povm(Povm({HermitianMatrix::identity(3)})));
  ASSERT_EQ(dec.size(), 1u);
  EXPECT_DOUBLE_EQ(dec.weights[0], 1.0);
}

TEST(DecomposeIdentityTest, FourProjectors) {
  const NormalizedPovm n = normalize_povm(four_projectors());
  const IdentityDecomposition dec = decompose_identity(n);
  ASSERT_EQ(dec.size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_NEAR(dec.weights[k], 0.5, 1e-12);
    EXPECT_EQ(support_of(dec.solutions[k]).size(), 2u);
  }
  EXPECT_LE((dec.recombine() - RealVector::Constant(4, 0.25)).norm(), 1e-12);
  expect_leaves_are_basic(n, dec);
  const RealMatrix a = oracle::design(n.normalized_ops);
  RealVector c = RealVector::Zero(a.rows());
  c.head(3).setOnes();
  EXPECT_EQ(oracle::basic_solutions(a, c).size(), 2u);
}

TEST(DecomposeIdentityTest, TrineOrbitSliceLeavesHaveSmallSupport) {
  const auto sums = trine_orbit_sums({0.0, 1.0 / 3.0, 2.0 / 3.0});
  const DesignMatrix dm = build_design_matrix(sums);
  const RealVector lambda = RealVector::Constant(3, 1.0 / 3.0);
  const IdentityDecomposition dec = decompose_feasible(dm, lambda);
  EXPECT_GE(dec.size(), 2u);
  for (const auto& nu : dec.solutions) EXPECT_LE(support_of(nu).size(), 2u);
  EXPECT_LE((dec.recombine() - lambda).norm(), 1e-12);
}

TEST(DecomposeIdentityTest, RandomInstancesMatchSubsetOracle) {
  random::Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 4);
    const NormalizedPovm np = normalize_povm(random::povm(rng, 2, n));
    const IdentityDecomposition dec = decompose_identity(np);
    double total = 0.0;
    for (double w : dec.weights) total += w;
    EXPECT_NEAR(total, 1.0, 1e-12);
    RealVector lambda(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) lambda[static_cast<Eigen::Index>(i)] = np.weights[i];
    EXPECT_LE((dec.recombine() - lambda).cwiseAbs().maxCoeff(), 1e-10);
    expect_leaves_are_basic(np, dec);
  }
}

TEST(DecomposeFeasibleTest, RejectsInfeasibleWeights) {
  const NormalizedPovm n = normalize_povm(four_projectors());
  const DesignMatrix dm = build_design_matrix(n.normalized_ops);
  EXPECT_THROW(decompose_feasible(dm, RealVector::Constant(4, 0.3)), DecompositionError);
  EXPECT_THROW(decompose_feasible(dm, (RealVector(4) << 0.5, 0.5, 0.25, -0.25).finished()), DecompositionError);
  EXPECT_THROW(decompose_feasible(dm, RealVector::Constant(3, 0.25)), DimensionError);
}

TEST(PrunePovmTest, SmallPovmIsKept) {
  random::Rng rng(30);
  const Ensemble s = random::ensemble(rng, 2, 3);
  const Povm p({proj2(1, 0), proj2(0, 1)});
  const PruneResult r = prune_povm(s, p);
  EXPECT_EQ(r.povm.size(), 2u);
  EXPECT_NEAR(r.info_after, r.info_before, 1e-12);
}

TEST(PrunePovmTest, RandomSevenOperatorQubitPovm) {
  random::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Ensemble s = random::ensemble(rng, 2, 3);
    const Povm p = random::povm(rng, 2, 7);
    const PruneResult r = prune_povm(s, p);
    EXPECT_LE(r.povm.size(), 4u);
    EXPECT_TRUE(validate_povm(r.povm).ok());
    EXPECT_GE(r.info_after, r.info_before - 1e-9);
    EXPECT_NEAR(r.info_after, oracle::mutual_information(s, r.povm), 1e-12);
  }
}

TEST(PrunePovmTest, TwoOrbitTrinePovm) {
  const Ensemble s = trines::lifted_trines(0.05);
  const double c = std::acos(std::sqrt(0.3831));
  const double lambda = trines::mixing_weight(0.0, 0.3831);
  const Povm p = convex_combine(Povm(trines::trine_orbit(std::numbers::pi / 2, std::numbers::pi / 2)),
                                Povm(trines::trine_orbit(c, 0.0)), lambda);
  const PruneResult r = prune_povm(s, p);
  EXPECT_LE(r.povm.size(), 9u);
  EXPECT_GE(r.info_after, r.info_before - 1e-9);
}

TEST(PruneSymmetricTest, TrivialGroupBehavesLikePlainPruning) {
  random::Rng rng(32);
  const Ensemble s = random::ensemble(rng, 2, 3);
  const Povm p = random::povm(rng, 2, 6);
  const PruneResult r = prune_symmetric_povm(s, p, FiniteRep::trivial(2), false);
  EXPECT_LE(r.povm.size(), 4u);
  EXPECT_LE(r.orbit_count, 4u);
  EXPECT_GE(r.info_after, r.info_before - 1e-9);
}

TEST(PruneSymmetricTest, LiftedTrinesNeedAtMostTwoOrbits) {
  random::Rng rng(33);
  const Ensemble s = trines::lifted_trines(0.05);
  const FiniteRep g = trines::trine_group();
  for (int trial = 0; trial < 10; ++trial) {
    const Povm start = symmetrize(random::povm(rng, 3, 4, 1, trial % 2 == 0), g);
    const PruneResult r = prune_symmetric_povm(s, start, g, true);
    EXPECT_LE(r.orbit_count, 2u);
    EXPECT_TRUE(validate_povm(r.povm).ok());
    EXPECT_GE(r.info_after, r.info_before - 1e-9);
    EXPECT_TRUE(r.povm.is_real());
  }
}

TEST(PruneSymmetricTest, DoubleTrinesPgmIsOneOrbit) {
  const Ensemble s = trines::double_trines().projected;
  const PruneResult r = prune_symmetric_povm(s, pretty_good_measurement(s), trines::trine_group(), true);
  EXPECT_EQ(r.orbit_count, 1u);
  EXPECT_NEAR(r.info_after, trines::double_trines_closed_form(), 1e-9);
}

TEST(PruneSymmetricTest, Errors) {
  const Ensemble s = trines::lifted_trines(0.05);
  const Ensemble skewed(s.states(), {0.5, 0.25, 0.25});
  const Povm p = pretty_good_measurement(s);
  EXPECT_THROW(prune_symmetric_povm(skewed, p, trines::trine_group(), true), SymmetryError);
  // A global phase leaves every state fixed but is not a real representation.
  const ComplexMatrix phase = Complex(0, 1) * ComplexMatrix::Identity(3, 3);
  const FiniteRep complex_group = generate_group(std::vector<ComplexMatrix>{phase}, 3);
  EXPECT_THROW(prune_symmetric_povm(s, p, complex_group, true), GroupError);
  EXPECT_THROW(prune_symmetric_povm(s, p, FiniteRep::trivial(2), false), DimensionError);
}

}  // namespace
}  // namespace povm_forge
