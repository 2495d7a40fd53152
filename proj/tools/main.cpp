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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  namespace cli = povm_forge::cli;
  CLI::App app{"povm_forge: mutual information, symmetrization and pruning of quantum measurements"};
  app.require_subcommand(1);

  std::string path;
  std::string out_file;
  std::string experiment;
  bool json = false;
  bool real = false;
  bool group = false;
  double tol = 1e-9;
  cli::ExperimentOptions exp_opts;
  std::string out_dir = ".";

  auto* validate = app.add_subcommand("validate", "Check the ensemble, POVM and group in a problem file");
  validate->add_option("file", path, "Problem file (JSON)")->required();
  validate->add_option("--tol", tol, "Validation tolerance");
  validate->add_flag("--json", json, "Print a machine-readable report on stdout");

  auto* bound = app.add_subcommand("bound", "Orbit-count bounds for the group in a problem file");
  bound->add_option("file", path, "Problem file with \"generators\"")->required();
  bound->add_flag("--real", real, "Also print the bound for real data");
  bound->add_flag("--json", json, "JSON output");

  auto* decompose = app.add_subcommand("decompose", "Decompose the identity into basic POVM solutions");
  decompose->add_option("file", path, "Problem file with \"povm\"")->required();

  auto* prune = app.add_subcommand("prune", "Reduce a POVM without losing mutual information");
  prune->add_option("file", path, "Problem file with \"states\" and \"povm\"")->required();
  prune->add_flag("--group", group, "Keep the result a union of orbits of the file's group");
  prune->add_flag("--real", real, "Use the real orbit bound (real ensemble and group)");
  prune->add_option("-o,--out", out_file, "Write the pruned problem here instead of stdout");

  auto* exp = app.add_subcommand("experiment", "Run the lifted-trines or double-trines experiment");
  exp->add_option("name", experiment, "lifted-trines | double-trines")->required();
  exp->add_option("--alpha", exp_opts.alpha, "Lifting parameter (lifted-trines)")->check(CLI::Range(0.0, 1.0));
  exp->add_option("--out-dir", out_dir, "Directory for surface.csv, optimum.json, ...");
  exp->add_option("--nx", exp_opts.nx, "Surface grid points along x")->check(CLI::PositiveNumber);
  exp->add_option("--nb", exp_opts.nb, "Surface grid points along b")->check(CLI::PositiveNumber);
  exp->add_flag("--json", exp_opts.json, "JSON summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kSuccess : cli::kUsageFailure;
  }

  const cli::Streams io{std::cout, std::cerr};
  if (*validate) return cli::cmd_validate(path, tol, json, io);
  if (*bound) return cli::cmd_bound(path, real, json, io);
  if (*decompose) return cli::cmd_decompose(path, io);
  if (*prune) return cli::cmd_prune(path, group, real, out_file, io);
  if (*exp) {
    if (exp_opts.nx < 2 || exp_opts.nb < 2) {
      std::cerr << "error: --nx and --nb must be at least 2\n";
      return cli::kUsageFailure;
    }
    exp_opts.out_dir = out_dir;
    exp_opts.threads = cli::thread_limit();
    return cli::cmd_experiment(experiment, exp_opts, io);
  }
  return cli::kUsageFailure;
}
