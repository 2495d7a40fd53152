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

// Writes the bundled example problem files into a directory.
//
//   make_fixtures <out-dir>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <vector>

#include <json.hpp>

#include "povm_forge/infotheory.hpp"
#include "povm_forge/problem_file.hpp"
#include "povm_forge/quantum.hpp"
#include "povm_forge/random.hpp"
#include "povm_forge/symmetry.hpp"
#include "povm_forge/trines.hpp"

namespace fs = std::filesystem;
using namespace povm_forge;

namespace {

ComplexMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  ComplexMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

void write(const fs::path& dir, const char* name, const ProblemFile& problem) {
  save_json(to_json(problem), dir / name);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <out-dir>\n";
    return 2;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);
  random::Rng rng(20260101);

  const Ensemble trines = trines::lifted_trines(0.05);
  const std::vector<ComplexMatrix> c3{trines::trine_rotation()};
  write(dir, "lifted_trines_0.05.json",
        make_problem(trines, std::nullopt, c3, "lifted trines", "alpha = 0.05 with the C3 rotation"));

  write(dir, "trine_group.json", make_problem(std::nullopt, std::nullopt, c3, "trine group", "C3 acting on R^3"));

  ProblemFile trivial;
  trivial.dimension = 3;
  trivial.generators = std::vector<ComplexMatrix>{};
  trivial.metadata = {{"name", "trivial group"}, {"description", ""}};
  write(dir, "trivial_group_d3.json", trivial);

  const double h = std::sqrt(3.0) / 2;
  const std::vector<ComplexMatrix> s3{real_matrix({{-0.5, -h}, {h, -0.5}}), real_matrix({{1, 0}, {0, -1}})};
  write(dir, "s3_irrep.json",
        make_problem(std::nullopt, std::nullopt, s3, "S3 irrep", "two-dimensional irreducible rep"));

  const Povm identity({HermitianMatrix::identity(2)});
  write(dir, "identity_d2.json", make_problem(std::nullopt, identity, std::nullopt, "identity"));

  ComplexVector plus(2), minus(2), zero(2), one(2);
  zero << 1, 0;
  one << 0, 1;
  plus << 1 / std::numbers::sqrt2, 1 / std::numbers::sqrt2;
  minus << 1 / std::numbers::sqrt2, -1 / std::numbers::sqrt2;
  const Povm four({0.5 * HermitianMatrix::projector(zero), 0.5 * HermitianMatrix::projector(one),
                   0.5 * HermitianMatrix::projector(plus), 0.5 * HermitianMatrix::projector(minus)});
  const Ensemble bb84 = Ensemble::from_kets({zero, plus}, {0.5, 0.5});
  write(dir, "four_projectors_d2.json", make_problem(bb84, four, std::nullopt, "four projectors"));

  const Povm seed = random::povm(rng, 3, 2, 2, true);
  const Povm sym = symmetrize(seed, trines::trine_group());
  write(dir, "trines_symmetric_povm.json",
        make_problem(trines, sym, c3, "symmetric trines POVM", "orbit closure of a random real 2-operator POVM"));

  write(dir, "random_d2_7ops.json",
        make_problem(random::ensemble(rng, 2, 3), random::povm(rng, 2, 7), std::nullopt, "random d=2 POVM"));

  const trines::DoubleTrines dt = trines::double_trines();
  write(dir, "double_trines.json",
        make_problem(dt.projected, pretty_good_measurement(dt.projected), c3, "double trines",
                     "projected double trines with their pretty good measurement"));

  nlohmann::json bad = to_json(make_problem(Ensemble::from_kets({zero, one}, {0.5, 0.5}), std::nullopt));
  bad["priors"] = {0.6, 0.5};
  save_json(bad, dir / "bad_priors.json");

  std::ofstream(dir / "malformed.json") << "{\"dimension\": 2, \"states\": [[[1, 0], [0, 0]]\n";
  return 0;
}
