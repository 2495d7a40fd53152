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

#include <cmath>
#include <fstream>
#include <sstream>

#include "povm_forge/errors.hpp"

namespace povm_forge {

using nlohmann::json;

namespace {

double number_from(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(where + ": non-finite number");
  return v;
}

Complex entry_from(const json& j, const std::string& where) {
  if (j.is_number()) return {number_from(j, where), 0.0};
  if (j.is_array() && j.size() == 2) return {number_from(j[0], where), number_from(j[1], where)};
  throw ParseError(where + ": expected [re, im] or a number");
}

std::vector<ComplexMatrix> matrix_list(const json& j, const char* key, int dimension) {
  if (!j.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of matrices");
  std::vector<ComplexMatrix> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    try {
      out.push_back(matrix_from_json(j[k], dimension));
    } catch (const ParseError& e) {
      throw ParseError(std::string(key) + "[" + std::to_string(k) + "]: " + e.what());
    }
  }
  return out;
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, int dimension) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(dimension)) {
    throw ParseError("matrix must have " + std::to_string(dimension) + " rows");
  }
  ComplexMatrix m(dimension, dimension);
  for (int r = 0; r < dimension; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dimension)) {
      throw ParseError("row " + std::to_string(r) + " must have " + std::to_string(dimension) + " entries");
    }
    for (int c = 0; c < dimension; ++c) {
      m(r, c) = entry_from(row[static_cast<std::size_t>(c)], "entry (" + std::to_string(r) + ", " + std::to_string(c) + ")");
    }
  }
  return m;
}

json matrices_to_json(const std::vector<HermitianMatrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(matrix_to_json(m.matrix()));
  return out;
}

ProblemFile parse_problem(const json& j) {
  if (!j.is_object()) throw ParseError("problem file must be a JSON object");
  ProblemFile p;
  if (!j.contains("dimension") || !j["dimension"].is_number_integer() || j["dimension"].get<int>() < 1) {
    throw ParseError("\"dimension\" must be a positive integer");
  }
  p.dimension = j["dimension"].get<int>();
  if (j.contains("states")) {
    p.states = matrix_list(j["states"], "states", p.dimension);
    if (!j.contains("priors") || !j["priors"].is_array()) throw ParseError("\"states\" requires a \"priors\" array");
    for (std::size_t k = 0; k < j["priors"].size(); ++k) {
      p.priors.push_back(number_from(j["priors"][k], "priors[" + std::to_string(k) + "]"));
    }
    if (p.priors.size() != p.states->size()) throw ParseError("\"priors\" and \"states\" differ in length");
    if (p.states->empty()) throw ParseError("\"states\" must not be empty");
  }
  if (j.contains("povm")) {
    p.povm = matrix_list(j["povm"], "povm", p.dimension);
    if (p.povm->empty()) throw ParseError("\"povm\" must not be empty");
  }
  if (j.contains("generators")) p.generators = matrix_list(j["generators"], "generators", p.dimension);
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw ParseError("\"metadata\" must be an object");
    p.metadata = j["metadata"];
  }
  return p;
}

ProblemFile parse_problem_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(j);
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

Ensemble ProblemFile::make_ensemble() const {
  if (!states) throw ParseError("problem file has no ensemble");
  std::vector<HermitianMatrix> hs;
  for (const auto& m : *states) hs.emplace_back(m);
  return Ensemble(std::move(hs), priors);
}

Povm ProblemFile::make_povm() const {
  if (!povm) throw ParseError("problem file has no POVM");
  std::vector<HermitianMatrix> hs;
  for (const auto& m : *povm) hs.emplace_back(m);
  return Povm(std::move(hs));
}

FiniteRep ProblemFile::make_group(std::size_t max_order) const {
  if (!generators) throw ParseError("problem file has no group generators");
  return generate_group(*generators, dimension, max_order);
}

json to_json(const ProblemFile& problem) {
  json j;
  j["dimension"] = problem.dimension;
  if (problem.states) {
    json states = json::array();
    for (const auto& m : *problem.states) states.push_back(matrix_to_json(m));
    j["states"] = std::move(states);
    j["priors"] = problem.priors;
  }
  if (problem.povm) {
    json ops = json::array();
    for (const auto& m : *problem.povm) ops.push_back(matrix_to_json(m));
    j["povm"] = std::move(ops);
  }
  if (problem.generators) {
    json gens = json::array();
    for (const auto& m : *problem.generators) gens.push_back(matrix_to_json(m));
    j["generators"] = std::move(gens);
  }
  j["metadata"] = problem.metadata;
  return j;
}

ProblemFile make_problem(const std::optional<Ensemble>& ensemble, const std::optional<Povm>& povm,
                         const std::optional<std::vector<ComplexMatrix>>& generators, const std::string& name,
                         const std::string& description) {
  ProblemFile p;
  if (ensemble) {
    p.dimension = ensemble->dim();
    p.states.emplace();
    for (const auto& s : ensemble->states()) p.states->push_back(s.matrix());
    p.priors = ensemble->priors();
  }
  if (povm) {
    p.dimension = povm->dim();
    p.povm.emplace();
    for (const auto& op : povm->operators()) p.povm->push_back(op.matrix());
  }
  if (generators) {
    if (!generators->empty()) p.dimension = static_cast<int>(generators->front().rows());
    p.generators = generators;
  }
  if (p.dimension == 0) throw DimensionError("problem needs an ensemble, a POVM or generators");
  if (!name.empty()) p.metadata["name"] = name;
  if (!description.empty()) p.metadata["description"] = description;
  return p;
}

void save_json(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace povm_forge
