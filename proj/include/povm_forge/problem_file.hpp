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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "povm_forge/hermitian.hpp"
#include "povm_forge/quantum.hpp"
#include "povm_forge/symmetry.hpp"

namespace povm_forge {

/// On-disk problem description.
///
///   {
///     "dimension": d,
///     "states":     [matrix, ...],        // optional, with "priors"
///     "priors":     [p0, p1, ...],
///     "povm":       [matrix, ...],        // optional
///     "generators": [matrix, ...],        // optional
///     "metadata":   {"name": ..., "description": ...}
///   }
///
/// A matrix is a row-major nested array whose entries are [re, im] pairs
/// (a bare number is read as a real entry). Matrices are kept raw here so
/// that Hermiticity problems surface as validation failures, not parse
/// failures.
struct ProblemFile {
  int dimension = 0;
  std::optional<std::vector<ComplexMatrix>> states;
  std::vector<double> priors;
  std::optional<std::vector<ComplexMatrix>> povm;
  std::optional<std::vector<ComplexMatrix>> generators;
  nlohmann::json metadata = nlohmann::json::object();

  /// These throw the library's domain errors (HermiticityError, ...).
  Ensemble make_ensemble() const;
  Povm make_povm() const;
  FiniteRep make_group(std::size_t max_order = kDefaultMaxOrder) const;
};

/// Throws ParseError on malformed JSON or schema violations.
ProblemFile parse_problem(const nlohmann::json& j);
ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem(const std::filesystem::path& path);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, int dimension);
nlohmann::json matrices_to_json(const std::vector<HermitianMatrix>& ms);

nlohmann::json to_json(const ProblemFile& problem);
ProblemFile make_problem(const std::optional<Ensemble>& ensemble, const std::optional<Povm>& povm,
                         const std::optional<std::vector<ComplexMatrix>>& generators = std::nullopt,
                         const std::string& name = "",
                         const std::string& description = "");

void save_json(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace povm_forge
