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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "commands.hpp"
#include "povm_forge/errors.hpp"
#include "povm_forge/infotheory.hpp"
#include "povm_forge/problem_file.hpp"
#include "povm_forge/quantum.hpp"
#include "povm_forge/trines.hpp"

namespace povm_forge::cli {

using nlohmann::json;
namespace tr = povm_forge::trines;

namespace {

/// One row of the reference table printed after an experiment.
struct Check {
  std::string name;
  double value;
  double reference;
  double tolerance;
  bool pass;
};

Check near(std::string name, double value, double reference, double tolerance) {
  return {std::move(name), value, reference, tolerance, std::abs(value - reference) <= tolerance};
}

void write_surface(const std::vector<tr::SurfacePoint>& surface, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << "x,b,info_bits,dinfo_db\n";
  char line[128];
  for (const auto& p : surface) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", p.x, p.b, p.info_bits, p.dinfo_db);
    out << line;
  }
}

json point_json(const tr::LiftedTrinesModel& model, const tr::OrbitParams& p) {
  return json{{"x", p.x()}, {"a", p.a}, {"b", p.b}, {"info_bits", model.orbit_info(p.a, p.b)}};
}

json optimum_json(double alpha, const tr::SingleOrbitOptimum& single, const tr::TwoOrbitSolution& two) {
  const tr::LiftedTrinesModel model(alpha);
  return json{{"alpha", alpha},
              {"single_orbit", {{"x", single.params.x()}, {"a", single.params.a}, {"b", single.params.b},
                                {"info_bits", single.info_bits}}},
              {"two_orbits", {{"first", point_json(model, two.first)}, {"second", point_json(model, two.second)},
                              {"lambda", two.lambda}, {"info_bits", two.info_bits}}}};
}

int report(const std::string& title, const std::vector<Check>& checks, json extra, const ExperimentOptions& o,
           Streams io) {
  bool all = true;
  for (const auto& c : checks) all = all && c.pass;
  if (o.json) {
    json rows = json::array();
    for (const auto& c : checks) {
      rows.push_back({{"check", c.name}, {"value", c.value}, {"reference", c.reference},
                      {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    extra["checks"] = rows;
    extra["all_pass"] = all;
    io.out << extra.dump(2) << '\n';
  } else {
    io.out << title << "\n";
    io.out << std::left << std::setw(34) << "check" << std::setw(16) << "value" << std::setw(16) << "reference"
           << std::setw(10) << "tol" << "result\n";
    for (const auto& c : checks) {
      io.out << std::left << std::setw(34) << c.name << std::setw(16) << std::setprecision(8) << c.value
             << std::setw(16) << c.reference << std::setw(10) << std::setprecision(2) << c.tolerance
             << (c.pass ? "PASS" : "FAIL") << '\n';
    }
  }
  return all ? kSuccess : kDomainFailure;
}

int lifted_trines_experiment(const ExperimentOptions& o, Streams io) {
  const double alpha = o.alpha;
  const auto surface = tr::scan_surface(alpha, o.nx, o.nb, o.threads);
  const auto single = tr::optimize_single_orbit(alpha);
  const auto two = tr::optimize_two_orbits(alpha);
  write_surface(surface, o.out_dir / "surface.csv");
  save_json(optimum_json(alpha, single, two), o.out_dir / "optimum.json");

  std::vector<Check> checks;
  if (std::abs(alpha - 0.05) < 1e-12) {
    checks.push_back(near("single-orbit information", single.info_bits, 0.8456, 5e-4));
    checks.push_back(near("single-orbit b*", single.params.b, 0.1377, 2e-3));
    checks.push_back(near("orbit info (pi/2, pi/2)", tr::orbit_info(alpha, std::numbers::pi / 2, std::numbers::pi / 2),
                          0.15996, 5e-5));
    checks.push_back(
        near("orbit info (acos sqrt .3831, 0)", tr::orbit_info(alpha, std::acos(std::sqrt(0.3831)), 0.0), 0.9499, 5e-4));
    checks.push_back(near("two-orbit information", two.info_bits, 0.8472, 5e-4));
    checks.push_back({"two-orbit gain over single", two.info_bits - single.info_bits, 0.0, 0.0,
                      two.info_bits > single.info_bits});
  } else if (std::abs(alpha - 1.0) < 1e-12) {
    checks.push_back(near("single-orbit information", single.info_bits, 0.0, 1e-9));
    checks.push_back(near("two-orbit information", two.info_bits, 0.0, 1e-9));
  }
  json extra = optimum_json(alpha, single, two);
  extra["experiment"] = "lifted-trines";
  char title[96];
  std::snprintf(title, sizeof title, "lifted trines, alpha = %g (%zu surface points)", alpha, surface.size());
  return report(title, checks, extra, o, io);
}

int double_trines_experiment(const ExperimentOptions& o, Streams io) {
  constexpr double kAlpha = 0.5;
  const tr::DoubleTrines dt = tr::double_trines();
  const double closed = tr::double_trines_closed_form();
  const auto surface = tr::scan_surface(kAlpha, o.nx, o.nb, o.threads);
  const auto single = tr::optimize_single_orbit(kAlpha);
  const auto two = tr::optimize_two_orbits(kAlpha);
  const Povm pgm = pretty_good_measurement(dt.projected);
  const double pgm_info = mutual_information(dt.projected, pgm);
  const Eigen::Matrix2d hess = tr::hessian_at(kAlpha, 1.0 / 3.0, 0.0);
  const Eigen::Vector2d hess_ref = tr::double_trines_hessian_closed_form();
  const Eigen::Vector2d eigs = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(hess).eigenvalues();

  write_surface(surface, o.out_dir / "surface.csv");
  save_json(optimum_json(kAlpha, single, two), o.out_dir / "optimum.json");
  save_json(json{{"povm", matrices_to_json(pgm.operators())}, {"info_bits", pgm_info}, {"closed_form_bits", closed}},
            o.out_dir / "pgm.json");
  save_json(json{{"point", {1.0 / 3.0, 0.0}},
                 {"h", 1e-4},
                 {"hessian", {{hess(0, 0), hess(0, 1)}, {hess(1, 0), hess(1, 1)}}},
                 {"closed_form_diagonal", {hess_ref[0], hess_ref[1]}},
                 {"eigenvalues", {eigs[0], eigs[1]}},
                 {"negative_definite", eigs.maxCoeff() < 0.0}},
            o.out_dir / "hessian.json");

  std::vector<Check> checks{
      near("closed form I(nu, 0)", closed, 1.369, 1e-3),
      near("single-orbit information", single.info_bits, closed, 1e-9),
      near("single-orbit b*", single.params.b, 0.0, 1e-6),
      near("PGM information", pgm_info, closed, 1e-6),
      near("Hessian xx", hess(0, 0), hess_ref[0], 1e-2),
      near("Hessian bb", hess(1, 1), hess_ref[1], 1e-2),
      {"Hessian negative definite", eigs.maxCoeff(), 0.0, 0.0, eigs.maxCoeff() < 0.0},
      {"two orbits do not beat one", two.info_bits - single.info_bits, 0.0, 1e-9,
       two.info_bits <= single.info_bits + 1e-9},
  };
  json extra = optimum_json(kAlpha, single, two);
  extra["experiment"] = "double-trines";
  extra["pgm_info_bits"] = pgm_info;
  extra["closed_form_bits"] = closed;
  return report("double trines (lifted trines, alpha = 1/2)", checks, extra, o, io);
}

}  // namespace

int cmd_experiment(const std::string& name, const ExperimentOptions& options, Streams io) {
  if (name != "lifted-trines" && name != "double-trines") {
    io.err << "error: unknown experiment '" << name << "' (expected lifted-trines or double-trines)\n";
    return kUsageFailure;
  }
  try {
    std::filesystem::create_directories(options.out_dir);
    return name == "lifted-trines" ? lifted_trines_experiment(options, io) : double_trines_experiment(options, io);
  } catch (const RangeError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsageFailure;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    io.err << "error: " << e.what() << '\n';
    return kDomainFailure;
  }
}

}  // namespace povm_forge::cli
