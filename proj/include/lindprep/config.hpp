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
#include <stdexcept>
#include <string>
#include <vector>

namespace lindprep {

/// Schema violation; `path` points at the offending key (dotted).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct SystemConfig {
  std::string kind;  // qubits | qudits | spin1-chain | bose-lattice | fermi-lattice
  int n = 0;         // chain length (qubits, qudits, spin1-chain)
  int d = 0;         // local dimension (qudits)
  int sites = 0;     // lattice sites (bose-lattice, fermi-lattice)
  int particles = 0; // bosons (bose-lattice)
  int pairs = 0;     // eta pairs (fermi-lattice)
  std::string boundary = "periodic";  // periodic | open
};

struct ProcessConfig {
  std::string constructor;    // sigma-minus | conjugated | graph | global-ladder |
                              // qudit-ladder | aklt | bec | eta
  std::vector<double> rates;  // empty: uniform 1; single: uniform; else per jump
  std::string graph;          // named graph: path | cycle | complete
  std::string graph_file;     // GraphSpec text file (overrides `graph`)
  std::string unitary_file;   // conjugated: matrix text file
  std::string basis = "computational";  // global-ladder: computational | graph
  std::string variant = "ladder";       // aklt: ladder | twirl
  int n_twirl = 9;
  double j_hop = 1.0;
  double u_int = 0.0;
};

struct TaskConfig {
  std::string kind;  // spectrum | evolve | verify | gap-scan
  std::string mode = "auto";  // auto | dense | sparse
  double t_max = 10.0;
  int n_steps = 100;
  std::string initial = "maximally-mixed";  // maximally-mixed | target | basis:<index>
  std::vector<int> sizes;                   // gap-scan
  std::uint64_t seed = 12345;
  double tolerance = 1e-10;
};

struct OutputConfig {
  std::string directory = "out";
  std::string stem = "run";
};

struct RunConfig {
  SystemConfig system;
  ProcessConfig process;
  TaskConfig task;
  OutputConfig output;
};

/// Parse and validate a JSON config. Unknown keys, type mismatches and
/// invalid combinations throw ConfigError with the offending path.
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

/// Canonical JSON rendering; parse(serialize(c)) reproduces c.
std::string serialize_config(const RunConfig& config);

}  // namespace lindprep
