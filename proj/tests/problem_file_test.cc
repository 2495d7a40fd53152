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

#include "povm_forge/problem_file.hpp"

#include <gtest/gtest.h>

#include "povm_forge/errors.hpp"
#include "povm_forge/random.hpp"
#include "povm_forge/trines.hpp"

namespace povm_forge {
namespace {

using nlohmann::json;

TEST(ProblemFileTest, RoundTripIsBitIdentical) {
  random::Rng rng(50);
  const Ensemble s = random::ensemble(rng, 3, 4, 2);
  const Povm p = random::povm(rng, 3, 5);
  const std::vector<ComplexMatrix> gens{trines::trine_rotation()};
  const json j = to_json(make_problem(s, p, gens, "round trip", "random"));
  const ProblemFile back = parse_problem_text(j.dump());
  const Ensemble s2 = back.make_ensemble();
  const Povm p2 = back.make_povm();
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(s.state(i).matrix(), s2.state(i).matrix());
    EXPECT_EQ(s.prior(i), s2.prior(i));
  }
  for (std::size_t k = 0; k < p.size(); ++k) EXPECT_EQ(p[k].matrix(), p2[k].matrix());
  EXPECT_EQ(back.make_group().order(), 3u);
  EXPECT_EQ(back.metadata["name"], "round trip");
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(ProblemFileTest, BareNumbersAreRealEntries) {
  const ProblemFile p = parse_problem_text(R"({"dimension": 2, "povm": [[[1, 0], [0, 1]]]})");
  EXPECT_TRUE(validate_povm(p.make_povm()).ok());
  EXPECT_FALSE(p.states.has_value());
  EXPECT_THROW(p.make_ensemble(), ParseError);
}

TEST(ProblemFileTest, MatrixEncoding) {
  ComplexMatrix m(2, 2);
  m << Complex(1, 0), Complex(0, -1), Complex(0, 1), Complex(2, 0);
  const json j = matrix_to_json(m);
  EXPECT_EQ(j[0][1], json::array({0.0, -1.0}));
  EXPECT_EQ(matrix_from_json(j, 2), m);
}

TEST(ProblemFileTest, NonHermitianSurvivesParsing) {
  const ProblemFile p = parse_problem_text(R"({"dimension": 2, "povm": [[[1, 1], [0, 0]]]})");
  EXPECT_THROW(p.make_povm(), HermiticityError);
}

TEST(ProblemFileTest, SchemaErrors) {
  for (const char* text : {
           "[1, 2]",
           R"({"states": []})",
           R"({"dimension": 0})",
           R"({"dimension": 2.5})",
           R"({"dimension": 2, "states": [[[1, 0], [0, 0]]]})",
           R"({"dimension": 2, "states": [[[1, 0], [0, 0]]], "priors": [0.5, 0.5]})",
           R"({"dimension": 2, "povm": [[[1, 0, 0], [0, 1]]]})",
           R"({"dimension": 2, "povm": [[[1, 0]]]})",
           R"({"dimension": 2, "povm": [[["a", 0], [0, 1]]]})",
           R"({"dimension": 2, "povm": [[[[1, 2, 3], 0], [0, 1]]]})",
           R"({"dimension": 2, "povm": []})",
           R"({"dimension": 2, "generators": 5})",
           R"({"dimension": 2, "metadata": []})",
           "{\"dimension\": 2,",
       }) {
    EXPECT_THROW(parse_problem_text(text), ParseError) << text;
  }
  EXPECT_THROW(load_problem("/nonexistent/problem.json"), ParseError);
}

TEST(ProblemFileTest, MakeProblemNeedsADimension) {
  EXPECT_THROW(make_problem(std::nullopt, std::nullopt), DimensionError);
}

}  // namespace
}  // namespace povm_forge
