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
#include <iosfwd>
#include <string>

namespace povm_forge::cli {

/// Stable exit codes for scripting.
enum ExitCode : int { kSuccess = 0, kDomainFailure = 1, kUsageFailure = 2 };

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int cmd_validate(const std::filesystem::path& path, double tol, bool json, Streams io);
int cmd_bound(const std::filesystem::path& path, bool real, bool json, Streams io);
int cmd_decompose(const std::filesystem::path& path, Streams io);
int cmd_prune(const std::filesystem::path& path, bool use_group, bool real, const std::filesystem::path& out_file,
              Streams io);

struct ExperimentOptions {
  double alpha = 0.05;
  std::filesystem::path out_dir = ".";
  int nx = 200;
  int nb = 200;
  unsigned threads = 1;
  bool json = false;
};

int cmd_experiment(const std::string& name, const ExperimentOptions& options, Streams io);

/// Thread cap from POVM_FORGE_THREADS (hardware concurrency when unset).
unsigned thread_limit();

}  // namespace povm_forge::cli
