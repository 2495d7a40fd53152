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

// Randomized checks of the structural identities relating mutual
// information to convex combinations, splits and symmetrization.

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "povm_forge/infotheory.hpp"
#include "povm_forge/quantum.hpp"
#include "povm_forge/random.hpp"
#include "povm_forge/symmetry.hpp"
#include "povm_forge/trines.hpp"

namespace povm_forge {
namespace {

// {λP_j + (1−λ)Q_j}, the shorter list padded with zero operators.
std::vector<HermitianMatrix> merge_pairwise(const Povm& p, const Povm& q, double lambda) {
  const std::size_t n = std::max(p.size(), q.size());
  std::vector<HermitianMatrix> out;
  for (std::size_t j = 0; j < n; ++j) {
    HermitianMatrix op = HermitianMatrix::zero(p.dim());
    if (j < p.size()) op += lambda * p[j];
    if (j < q.size()) op += (1 - lambda) * q[j];
    out.push_back(op);
  }
  return out;
}

class PropertyTest : public ::testing::TestWithParam<int> {
 protected:
  random::Rng rng{static_cast<std::uint64_t>(1000 + GetParam())};
  std::uniform_real_distribution<double> unit{0.0, 1.0};
};

TEST_P(PropertyTest, PairwiseMergeNeverGainsInformation) {
  const int d = GetParam();
  for (int trial = 0; trial < 100; ++trial) {
    const Ensemble s = random::ensemble(rng, d, 3);
    const Povm p = random::povm(rng, d, 3 + trial % 2);
    const Povm q = random::povm(rng, d, 3);
    const double lambda = unit(rng);
    const Povm merged(merge_pairwise(p, q, lambda));
    const double bound = lambda * oracle::mutual_information(s, p) + (1 - lambda) * oracle::mutual_information(s, q);
    EXPECT_LE(mutual_information(s, merged), bound + 1e-10);
  }
}

TEST_P(PropertyTest, PairwiseMergeOfProportionalMeasurementsIsTight) {
  const int d = GetParam();
  for (int trial = 0; trial < 20; ++trial) {
    const Ensemble s = random::ensemble(rng, d, 3);
    const Povm p = random::povm(rng, d, 4);
    const Povm q = p;
    const double lambda = unit(rng);
    for (std::size_t j = 0; j < p.size(); ++j) EXPECT_TRUE(equality_condition(s, p, q, j));
    const double merged = mutual_information(s, Povm(merge_pairwise(p, q, lambda)));
    EXPECT_NEAR(merged, mutual_information(s, p), 1e-10);
  }
}

TEST_P(PropertyTest, DisjointMixtureIsAdditive) {
  const int d = GetParam();
  for (int trial = 0; trial < 100; ++trial) {
    const Ensemble s = random::ensemble(rng, d, 2 + trial % 3);
    const Povm p = random::povm(rng, d, 3);
    const Povm q = random::povm(rng, d, 4, 1 + trial % 2);
    const double lambda = unit(rng);
    const double mixed = mutual_information(s, convex_combine(p, q, lambda));
    EXPECT_NEAR(mixed, lambda * oracle::mutual_information(s, p) + (1 - lambda) * oracle::mutual_information(s, q),
                1e-10);
  }
}

TEST_P(PropertyTest, SplittingAnOperatorKeepsInformation) {
  const int d = GetParam();
  for (int trial = 0; trial < 100; ++trial) {
    const Ensemble s = random::ensemble(rng, d, 3, 1 + trial % d);
    const Povm p = random::povm(rng, d, static_cast<std::size_t>(d + trial % 4));
    const std::size_t j = static_cast<std::size_t>(trial) % p.size();
    EXPECT_NEAR(mutual_information(s, split_operator(p, j, unit(rng))), mutual_information(s, p), 1e-12);
  }
}

TEST_P(PropertyTest, PaddingWithZeroOperatorsIsHarmless) {
  const int d = GetParam();
  const Ensemble s = random::ensemble(rng, d, 3);
  const Povm p = random::povm(rng, d, 3);
  std::vector<HermitianMatrix> ops = p.operators();
  ops.push_back(HermitianMatrix::zero(d));
  EXPECT_FALSE(validate_povm(Povm(ops)).ok());
  EXPECT_TRUE(validate_povm(Povm(ops), kValidationTol, true).ok());
  EXPECT_NEAR(mutual_information(joint_distribution(s, ops)), mutual_information(s, p), 1e-15);
}

INSTANTIATE_TEST_SUITE_P(Dimensions, PropertyTest, ::testing::Values(2, 3));

TEST(SymmetrizationPropertyTest, InformationIsInvariantForSymmetricEnsembles) {
  random::Rng rng(77);
  const FiniteRep g = trines::trine_group();
  for (int trial = 0; trial < 100; ++trial) {
    const Ensemble s = random::symmetric_ensemble(rng, g, 1 + trial % 2, 1 + trial % 2, trial % 3 == 0);
    ASSERT_TRUE(is_symmetric_ensemble(s, g));
    const Povm p = random::povm(rng, 3, 3 + static_cast<std::size_t>(trial % 3));
    const Povm sym = symmetrize(p, g);
    EXPECT_TRUE(validate_povm(sym).ok());
    EXPECT_NEAR(mutual_information(s, sym), mutual_information(s, p), 1e-9);
  }
}

TEST(SymmetrizationPropertyTest, QubitPhaseGroup) {
  random::Rng rng(78);
  ComplexMatrix z = ComplexMatrix::Identity(2, 2);
  z(1, 1) = -1;
  const FiniteRep g = generate_group(std::vector<ComplexMatrix>{z}, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const Ensemble s = random::symmetric_ensemble(rng, g, 2);
    const Povm p = random::povm(rng, 2, 3);
    EXPECT_NEAR(mutual_information(s, symmetrize(p, g)), mutual_information(s, p), 1e-9);
  }
}

}  // namespace
}  // namespace povm_forge
