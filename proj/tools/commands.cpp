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

#include "commands.hpp"

#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <thread>

#include <json.hpp>

#include "povm_forge/caratheodory.hpp"
#include "povm_forge/errors.hpp"
#include "povm_forge/infotheory.hpp"
#include "povm_forge/problem_file.hpp"
#include "povm_forge/quantum.hpp"
#include "povm_forge/symmetry.hpp"

namespace povm_forge::cli {

using nlohmann::json;

namespace {

std::optional<ProblemFile> load_or_report(const std::filesystem::path& path, Streams io) {
  try {
    return load_problem(path);
  } catch (const ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return std::nullopt;
  }
}

json section(bool present) {
  return json{{"present", present}, {"valid", present}, {"violations", json::array()}};
}

void fail(json& sec, const std::string& what, Streams io, const char* label) {
  sec["valid"] = false;
  sec["violations"].push_back(what);
  io.err << label << ": " << what << '\n';
}

}  // namespace

unsigned thread_limit() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("POVM_FORGE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

int cmd_validate(const std::filesystem::path& path, double tol, bool as_json, Streams io) {
  const auto problem = load_or_report(path, io);
  if (!problem) return kUsageFailure;

  json report{{"file", path.string()}, {"dimension", problem->dimension}};
  json ens = section(problem->states.has_value());
  json pov = section(problem->povm.has_value());
  json grp = section(problem->generators.has_value());

  if (problem->states) {
    try {
      const Ensemble s = problem->make_ensemble();
      for (const auto& v : validate_ensemble(s, tol).violations) fail(ens, v, io, "ensemble");
    } catch (const Error& e) {
      fail(ens, e.what(), io, "ensemble");
    }
  }
  if (problem->povm) {
    try {
      const Povm p = problem->make_povm();
      for (const auto& v : validate_povm(p, tol).violations) fail(pov, v, io, "povm");
    } catch (const Error& e) {
      fail(pov, e.what(), io, "povm");
    }
  }
  if (problem->generators) {
    try {
      const FiniteRep rep = problem->make_group();
      grp["order"] = rep.order();
    } catch (const Error& e) {
      fail(grp, e.what(), io, "group");
    }
  }
  const bool ok = ens["valid"].get<bool>() == ens["present"].get<bool>() &&
                  pov["valid"].get<bool>() == pov["present"].get<bool>() &&
                  grp["valid"].get<bool>() == grp["present"].get<bool>();
  report["ensemble"] = ens;
  report["povm"] = pov;
  report["group"] = grp;
  report["valid"] = ok;
  if (as_json) {
    io.out << report.dump(2) << '\n';
  } else {
    io.out << path.string() << ": " << (ok ? "valid" : "INVALID") << '\n';
  }
  return ok ? kSuccess : kDomainFailure;
}

int cmd_bound(const std::filesystem::path& path, bool real, bool as_json, Streams io) {
  const auto problem = load_or_report(path, io);
  if (!problem) return kUsageFailure;
  if (!problem->generators) {
    io.err << "error: file has no \"generators\"\n";
    return kUsageFailure;
  }
  try {
    const FiniteRep rep = problem->make_group();
    json out{{"order", rep.order()}, {"dimension", rep.dim()}, {"complex_bound", complex_orbit_bound(rep)}};
    if (real) out["real_bound"] = real_orbit_bound(rep);
    if (as_json) {
      io.out << out.dump(2) << '\n';
    } else {
      io.out << "complex " << out["complex_bound"].get<int>() << '\n';
      if (real) io.out << "real " << out["real_bound"].get<int>() << '\n';
    }
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
  return kSuccess;
}

int cmd_decompose(const std::filesystem::path& path, Streams io) {
  const auto problem = load_or_report(path, io);
  if (!problem) return kUsageFailure;
  if (!problem->povm) {
    io.err << "error: file has no \"povm\"\n";
    return kUsageFailure;
  }
  try {
    const Povm p = problem->make_povm();
    const auto report = validate_povm(p);
    if (!report.ok()) {
      for (const auto& v : report.violations) io.err << "povm: " << v << '\n';
      return kDomainFailure;
    }
    std::optional<Ensemble> s;
    if (problem->states) s = problem->make_ensemble();

    const NormalizedPovm normalized = normalize_povm(p);
    const IdentityDecomposition dec = decompose_identity(normalized);
    json out{{"dimension", p.dim()}, {"operators", p.size()}, {"weights", normalized.weights}};
    if (s) out["input_info_bits"] = mutual_information(*s, p);

    json leaves = json::array();
    std::optional<std::size_t> best;
    double best_info = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < dec.size(); ++k) {
      const auto supp = support_of(dec.solutions[k]);
      json leaf{{"mu", dec.weights[k]}, {"support", supp}};
      std::vector<double> nu(dec.solutions[k].data(), dec.solutions[k].data() + dec.solutions[k].size());
      leaf["nu"] = nu;
      if (s) {
        std::vector<HermitianMatrix> ops;
        for (std::size_t j : supp) ops.push_back(nu[j] * normalized.normalized_ops[j]);
        const double info = mutual_information(*s, Povm(std::move(ops)));
        leaf["info_bits"] = info;
        if (info > best_info) {
          best_info = info;
          best = k;
        }
      }
      leaves.push_back(std::move(leaf));
    }
    out["leaves"] = std::move(leaves);
    out["leaf_count"] = dec.size();
    if (best) {
      out["best_leaf"] = *best;
      out["best_info_bits"] = best_info;
    }
    io.out << out.dump(2) << '\n';
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
  return kSuccess;
}

int cmd_prune(const std::filesystem::path& path, bool use_group, bool real, const std::filesystem::path& out_file,
              Streams io) {
  const auto problem = load_or_report(path, io);
  if (!problem) return kUsageFailure;
  if (!problem->povm || !problem->states) {
    io.err << "error: pruning needs both \"states\" and \"povm\"\n";
    return kUsageFailure;
  }
  if (use_group && !problem->generators) {
    io.err << "error: --group given but the file has no \"generators\"\n";
    return kUsageFailure;
  }
  try {
    const Ensemble s = problem->make_ensemble();
    const Povm p = problem->make_povm();
    for (const ValidationReport& r : {validate_ensemble(s), validate_povm(p)}) {
      if (!r.ok()) {
        io.err << "error: invalid input: " << r.violations.front() << '\n';
        return kDomainFailure;
      }
    }
    std::optional<FiniteRep> rep;
    if (use_group) rep = problem->make_group();
    const PruneResult result = rep ? prune_symmetric_povm(s, p, *rep, real) : prune_povm(s, p);

    std::optional<std::vector<ComplexMatrix>> gens;
    if (use_group) gens = problem->generators;
    ProblemFile pruned = make_problem(s, result.povm, gens);
    pruned.metadata = problem->metadata;
    pruned.metadata["pruning"] = json{{"operators_before", p.size()},
                                      {"operators_after", result.povm.size()},
                                      {"orbit_count", result.orbit_count},
                                      {"leaf_count", result.decomposition.size()},
                                      {"info_before_bits", result.info_before},
                                      {"info_after_bits", result.info_after},
                                      {"symmetric", use_group},
                                      {"real_mode", real}};
    if (rep) {
      pruned.metadata["pruning"]["orbit_bound"] =
          real && s.is_real() ? real_orbit_bound(*rep) : complex_orbit_bound(*rep);
    }
    const json j = to_json(pruned);
    if (out_file.empty()) {
      io.out << j.dump(2) << '\n';
    } else {
      save_json(j, out_file);
    }
    io.err << "operators " << p.size() << " -> " << result.povm.size() << ", orbits " << result.orbit_count
           << ", information " << result.info_before << " -> " << result.info_after << " bit\n";
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
  return kSuccess;
}

}  // namespace povm_forge::cli
