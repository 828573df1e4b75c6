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

#include "lindprep/config.hpp"

#include <cctype>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lindprep/types.hpp"

namespace lindprep {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      const std::string where = path == "$" ? it.key() : path + "." + it.key();
      throw ConfigError(where, "unknown key");
    }
  }
}

const json* find(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::string string_field(const json& obj, const std::string& path, const char* key,
                         const std::string& fallback, bool required = false) {
  const json* v = find(obj, key);
  if (v == nullptr) {
    if (required) throw ConfigError(path + "." + key, "missing required key");
    return fallback;
  }
  if (!v->is_string()) throw ConfigError(path + "." + key, "expected a string");
  return v->get<std::string>();
}

int int_field(const json& obj, const std::string& path, const char* key, int fallback) {
  const json* v = find(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_number_integer()) throw ConfigError(path + "." + key, "expected an integer");
  return v->get<int>();
}

double double_field(const json& obj, const std::string& path, const char* key, double fallback) {
  const json* v = find(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_number()) throw ConfigError(path + "." + key, "expected a number");
  return v->get<double>();
}

std::uint64_t seed_field(const json& obj, const std::string& path, const char* key, std::uint64_t fallback) {
  const json* v = find(obj, key);
  if (v == nullptr) return fallback;
  if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<long long>() >= 0)) {
    throw ConfigError(path + "." + key, "expected a non-negative integer");
  }
  return v->get<std::uint64_t>();
}

void expect_one_of(const std::string& value, const std::string& path,
                   std::initializer_list<const char*> allowed) {
  for (const char* ok : allowed) {
    if (value == ok) return;
  }
  std::ostringstream msg;
  msg << "'" << value << "' is not one of {";
  bool first = true;
  for (const char* ok : allowed) {
    if (!first) msg << ", ";
    msg << ok;
    first = false;
  }
  msg << "}";
  throw ConfigError(path, msg.str());
}

SystemConfig parse_system(const json& obj) {
  const std::string path = "system";
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  check_keys(obj, path, {"kind", "n", "d", "sites", "particles", "pairs", "boundary"});
  SystemConfig system;
  system.kind = string_field(obj, path, "kind", "", true);
  expect_one_of(system.kind, path + ".kind",
                {"qubits", "qudits", "spin1-chain", "bose-lattice", "fermi-lattice"});
  system.n = int_field(obj, path, "n", 0);
  system.d = int_field(obj, path, "d", 0);
  system.sites = int_field(obj, path, "sites", 0);
  system.particles = int_field(obj, path, "particles", 0);
  system.pairs = int_field(obj, path, "pairs", 0);
  system.boundary = string_field(obj, path, "boundary", "periodic");
  expect_one_of(system.boundary, path + ".boundary", {"periodic", "open"});

  if (system.kind == "qubits" && system.n < 1) throw ConfigError(path + ".n", "need at least one qubit");
  if (system.kind == "qudits") {
    if (system.n < 1) throw ConfigError(path + ".n", "need at least one site");
    if (system.d < 2) throw ConfigError(path + ".d", "need local dimension at least two");
  }
  if (system.kind == "spin1-chain" && system.n < 2) throw ConfigError(path + ".n", "need at least two sites");
  if (system.kind == "bose-lattice") {
    if (system.sites < 2) throw ConfigError(path + ".sites", "need at least two sites");
    if (system.particles < 1) throw ConfigError(path + ".particles", "need at least one particle");
  }
  if (system.kind == "fermi-lattice") {
    if (system.sites < 2) throw ConfigError(path + ".sites", "need at least two sites");
    if (system.pairs < 1) throw ConfigError(path + ".pairs", "need at least one pair");
  }
  return system;
}

ProcessConfig parse_process(const json& obj) {
  const std::string path = "process";
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  check_keys(obj, path,
             {"constructor", "rates", "graph", "graph_file", "unitary_file", "basis", "variant", "n_twirl",
              "j_hop", "u_int"});
  ProcessConfig process;
  process.constructor = string_field(obj, path, "constructor", "", true);
  expect_one_of(process.constructor, path + ".constructor",
                {"sigma-minus", "conjugated", "graph", "global-ladder", "qudit-ladder", "aklt", "bec", "eta"});
  if (const json* rates = find(obj, "rates")) {
    if (!rates->is_array()) throw ConfigError(path + ".rates", "expected an array of numbers");
    for (size_t i = 0; i < rates->size(); ++i) {
      const json& r = (*rates)[i];
      if (!r.is_number()) throw ConfigError(path + ".rates", "expected an array of numbers");
      double value = r.get<double>();
      if (value < 0.0) throw ConfigError(path + ".rates", "rates must be non-negative");
      process.rates.push_back(value);
    }
  }
  process.graph = string_field(obj, path, "graph", "");
  if (!process.graph.empty()) expect_one_of(process.graph, path + ".graph", {"path", "cycle", "complete"});
  process.graph_file = string_field(obj, path, "graph_file", "");
  process.unitary_file = string_field(obj, path, "unitary_file", "");
  process.basis = string_field(obj, path, "basis", "computational");
  expect_one_of(process.basis, path + ".basis", {"computational", "graph"});
  process.variant = string_field(obj, path, "variant", "ladder");
  expect_one_of(process.variant, path + ".variant", {"ladder", "twirl"});
  process.n_twirl = int_field(obj, path, "n_twirl", 9);
  if (process.n_twirl < 1) throw ConfigError(path + ".n_twirl", "need at least one unitary");
  process.j_hop = double_field(obj, path, "j_hop", 1.0);
  process.u_int = double_field(obj, path, "u_int", 0.0);
  if (process.constructor == "conjugated" && process.unitary_file.empty()) {
    throw ConfigError(path + ".unitary_file", "constructor 'conjugated' needs a unitary file");
  }
  const bool needs_graph = process.constructor == "graph" ||
                           (process.constructor == "global-ladder" && process.basis == "graph");
  if (needs_graph && process.graph.empty() && process.graph_file.empty()) {
    throw ConfigError(path + ".graph", "need a named graph or a graph file");
  }
  return process;
}

TaskConfig parse_task(const json& obj) {
  const std::string path = "task";
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  check_keys(obj, path, {"kind", "mode", "t_max", "n_steps", "initial", "sizes", "seed", "tolerance"});
  TaskConfig task;
  task.kind = string_field(obj, path, "kind", "", true);
  expect_one_of(task.kind, path + ".kind", {"spectrum", "evolve", "verify", "gap-scan"});
  task.mode = string_field(obj, path, "mode", "auto");
  expect_one_of(task.mode, path + ".mode", {"auto", "dense", "sparse"});
  task.t_max = double_field(obj, path, "t_max", 10.0);
  if (task.t_max <= 0.0) throw ConfigError(path + ".t_max", "must be positive");
  task.n_steps = int_field(obj, path, "n_steps", 100);
  if (task.n_steps < 1) throw ConfigError(path + ".n_steps", "need at least one step");
  task.initial = string_field(obj, path, "initial", "maximally-mixed");
  if (task.initial != "maximally-mixed" && task.initial != "target") {
    bool valid = task.initial.rfind("basis:", 0) == 0 && task.initial.size() > 6;
    if (valid) {
      for (size_t i = 6; i < task.initial.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(task.initial[i]))) valid = false;
      }
    }
    if (!valid) throw ConfigError(path + ".initial", "expected maximally-mixed, target or basis:<index>");
  }
  if (const json* sizes = find(obj, "sizes")) {
    if (!sizes->is_array()) throw ConfigError(path + ".sizes", "expected an array of integers");
    for (size_t i = 0; i < sizes->size(); ++i) {
      const json& s = (*sizes)[i];
      if (!s.is_number_integer()) throw ConfigError(path + ".sizes", "expected an array of integers");
      int value = s.get<int>();
      if (value < 1) throw ConfigError(path + ".sizes", "sizes must be positive");
      task.sizes.push_back(value);
    }
  }
  if (task.kind == "gap-scan" && task.sizes.empty()) {
    throw ConfigError(path + ".sizes", "gap-scan needs a non-empty size list");
  }
  task.seed = seed_field(obj, path, "seed", 12345);
  task.tolerance = double_field(obj, path, "tolerance", 1e-10);
  if (task.tolerance <= 0.0) throw ConfigError(path + ".tolerance", "must be positive");
  return task;
}

OutputConfig parse_output(const json& obj) {
  const std::string path = "output";
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  check_keys(obj, path, {"directory", "stem"});
  OutputConfig output;
  output.directory = string_field(obj, path, "directory", "out");
  if (output.directory.empty()) throw ConfigError(path + ".directory", "must not be empty");
  output.stem = string_field(obj, path, "stem", "run");
  if (output.stem.empty() || output.stem.find('/') != std::string::npos) {
    throw ConfigError(path + ".stem", "must be a plain file stem");
  }
  return output;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("$", "expected a JSON object");
  check_keys(root, "$", {"system", "process", "task", "output"});

  RunConfig config;
  const json* system = find(root, "system");
  if (system == nullptr) throw ConfigError("system", "missing required section");
  config.system = parse_system(*system);
  const json* process = find(root, "process");
  if (process == nullptr) throw ConfigError("process", "missing required section");
  config.process = parse_process(*process);
  const json* task = find(root, "task");
  if (task == nullptr) throw ConfigError("task", "missing required section");
  config.task = parse_task(*task);
  if (const json* output = find(root, "output")) config.output = parse_output(*output);
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config: " + path);
  std::ostringstream buffer;
  buffer << is.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const RunConfig& config) {
  json root;
  root["system"] = {{"kind", config.system.kind},           {"n", config.system.n},
                    {"d", config.system.d},                 {"sites", config.system.sites},
                    {"particles", config.system.particles}, {"pairs", config.system.pairs},
                    {"boundary", config.system.boundary}};
  root["process"] = {{"constructor", config.process.constructor},
                     {"rates", config.process.rates},
                     {"graph", config.process.graph},
                     {"graph_file", config.process.graph_file},
                     {"unitary_file", config.process.unitary_file},
                     {"basis", config.process.basis},
                     {"variant", config.process.variant},
                     {"n_twirl", config.process.n_twirl},
                     {"j_hop", config.process.j_hop},
                     {"u_int", config.process.u_int}};
  root["task"] = {{"kind", config.task.kind},       {"mode", config.task.mode},
                  {"t_max", config.task.t_max},     {"n_steps", config.task.n_steps},
                  {"initial", config.task.initial}, {"sizes", config.task.sizes},
                  {"seed", config.task.seed},       {"tolerance", config.task.tolerance}};
  root["output"] = {{"directory", config.output.directory}, {"stem", config.output.stem}};
  return root.dump(2) + "\n";
}

}  // namespace lindprep
