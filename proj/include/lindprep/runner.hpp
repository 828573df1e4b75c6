// Copyright 2026 The lindprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lindprep/config.hpp"

namespace lindprep {

enum class ExitCode : int {
  kOk = 0,
  kUnexpected = 1,
  kUsage = 2,
  kConfig = 3,
  kModel = 4,
  kSolver = 5,
  kIo = 6,
};

/// Command-line overrides applied on top of the config file.
struct RunOverrides {
  std::optional<double> tolerance;
  std::optional<std::string> mode;  // dense | sparse
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
};

struct RunArtifacts {
  std::vector<std::string> files;  // paths written, in write order
  std::string summary;             // human-readable result block
};

/// Execute one configured task. Throws ConfigError / SolverError / IoError /
/// std::invalid_argument (model construction) on failure.
RunArtifacts run(const RunConfig& config, const RunOverrides& overrides = {});

/// Full CLI entry point: parses argv, runs, prints, maps errors to exit codes.
int run_cli(int argc, const char* const* argv);

}  // namespace lindprep
