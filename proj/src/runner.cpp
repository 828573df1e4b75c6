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

#include "lindprep/runner.hpp"

#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lindprep/constructors.hpp"
#include "lindprep/dynamics.hpp"
#include "lindprep/matrix_io.hpp"
#include "lindprep/models.hpp"
#include "lindprep/spectrum.hpp"
#include "lindprep/superoperator.hpp"
#include "lindprep/verification.hpp"

namespace lindprep {

namespace {

namespace fs = std::filesystem;

struct ModelBundle {
  LindbladProcess process;
  std::optional<Vector> target;
  std::string description;
  std::optional<std::string> basis_dump;
  // Rebuild at another chain length for gap scans; null when the model has
  // no single size parameter.
  std::function<LindbladProcess(int)> family;

  explicit ModelBundle(LindbladProcess p) : process(std::move(p)) {}
};

std::vector<double> per_jump_rates(const std::vector<double>& rates, std::size_t count) {
  if (rates.empty()) return std::vector<double>(count, 1.0);
  if (rates.size() == 1) return std::vector<double>(count, rates.front());
  if (rates.size() != count) {
    std::ostringstream msg;
    msg << "process.rates has " << rates.size() << " entries but the constructor produces " << count
        << " jump operators";
    throw std::invalid_argument(msg.str());
  }
  return rates;
}

double shared_rate(const std::vector<double>& rates) {
  if (rates.empty()) return 1.0;
  if (rates.size() == 1) return rates.front();
  throw std::invalid_argument("this constructor takes a single shared rate");
}

bool uniform_rates(const std::vector<double>& rates) { return rates.size() <= 1; }

GraphSpec resolve_graph(const RunConfig& config, int vertices) {
  if (!config.process.graph_file.empty()) {
    GraphSpec graph = GraphSpec::read_file(config.process.graph_file);
    if (graph.vertices() != vertices) {
      std::ostringstream msg;
      msg << "graph file has " << graph.vertices() << " vertices but system.n = " << vertices;
      throw std::invalid_argument(msg.str());
    }
    return graph;
  }
  const std::string& name = config.process.graph;
  if (name == "path") return GraphSpec::path(vertices);
  if (name == "cycle") return GraphSpec::cycle(vertices);
  if (name == "complete") return GraphSpec::complete(vertices);
  throw std::invalid_argument("no graph specified");
}

Vector computational_ket(int dim, int index) {
  Vector v = Vector::Zero(dim);
  v(index) = Complex(1, 0);
  return v;
}

std::vector<Vector> ladder_basis(const RunConfig& config, const CompositeSpace& space) {
  const int dim = space.dim();
  std::vector<Vector> basis;
  basis.reserve(dim);
  if (config.process.basis == "graph") {
    Matrix u = graph_basis_unitary(resolve_graph(config, config.system.n));
    for (int j = 0; j < dim; ++j) basis.push_back(u.col(j));
  } else {
    for (int j = 0; j < dim; ++j) basis.push_back(computational_ket(dim, j));
  }
  return basis;
}

ModelBundle build_qubit_model(const RunConfig& config) {
  const int n = config.system.n;
  const CompositeSpace space = CompositeSpace::qubits(n);
  const std::string& kind = config.process.constructor;
  ModelBundle bundle{LindbladProcess(space)};
  std::ostringstream desc;

  if (kind == "sigma-minus") {
    auto jumps = sigma_minus_jumps(n);
    auto rates = per_jump_rates(config.process.rates, jumps.size());
    for (std::size_t i = 0; i < jumps.size(); ++i) bundle.process.add_jump(jumps[i], rates[i]);
    bundle.target = computational_ket(space.dim(), 0);
    desc << "independent qubit decay, n = " << n;
    if (uniform_rates(config.process.rates)) {
      const double g = rates.empty() ? 1.0 : rates.front();
      bundle.family = [g](int m) {
        LindbladProcess p{CompositeSpace::qubits(m)};
        for (const auto& jump : sigma_minus_jumps(m)) p.add_jump(jump, g);
        return p;
      };
    }
  } else if (kind == "conjugated") {
    Matrix u = read_matrix_text_file(config.process.unitary_file);
    if (u.rows() != space.dim() || u.cols() != space.dim()) {
      throw std::invalid_argument("unitary file dimension does not match the qubit register");
    }
    auto jumps = conjugated_jumps(u, sigma_minus_jumps(n));
    auto rates = per_jump_rates(config.process.rates, jumps.size());
    for (std::size_t i = 0; i < jumps.size(); ++i) bundle.process.add_jump(jumps[i].matrix, rates[i]);
    bundle.target = u * computational_ket(space.dim(), 0);
    desc << "conjugated qubit decay, n = " << n;
  } else if (kind == "graph") {
    GraphSpec graph = resolve_graph(config, n);
    auto jumps = graph_state_jumps(graph);
    auto rates = per_jump_rates(config.process.rates, jumps.size());
    for (std::size_t i = 0; i < jumps.size(); ++i) bundle.process.add_jump(jumps[i], rates[i]);
    bundle.target = graph_state(graph);
    desc << "graph state pump, n = " << n << ", edges = " << graph.edges().size();
    const std::string name = config.process.graph_file.empty() ? config.process.graph : "";
    if (!name.empty() && uniform_rates(config.process.rates)) {
      const double g = rates.empty() ? 1.0 : rates.front();
      bundle.family = [name, g](int m) {
        GraphSpec gm = name == "path" ? GraphSpec::path(m)
                       : name == "cycle" ? GraphSpec::cycle(m)
                                         : GraphSpec::complete(m);
        LindbladProcess p{CompositeSpace::qubits(m)};
        for (const auto& jump : graph_state_jumps(gm)) p.add_jump(jump, g);
        return p;
      };
    }
  } else if (kind == "global-ladder") {
    auto basis = ladder_basis(config, space);
    Operator c = global_ladder_jump(basis, space);
    bundle.process.add_jump(c.matrix, shared_rate(config.process.rates));
    bundle.target = basis.front();
    desc << "global ladder on " << (config.process.basis == "graph" ? "graph" : "computational")
         << " basis, n = " << n;
  } else {
    throw std::invalid_argument("system kind 'qubits' does not support constructor '" + kind + "'");
  }
  bundle.description = desc.str();
  return bundle;
}

ModelBundle build_qudit_model(const RunConfig& config) {
  if (config.process.constructor != "qudit-ladder") {
    throw std::invalid_argument("system kind 'qudits' does not support constructor '" +
                                config.process.constructor + "'");
  }
  const int n = config.system.n;
  const int d = config.system.d;
  const CompositeSpace space = CompositeSpace::qudits(n, d);
  ModelBundle bundle{LindbladProcess(space)};
  auto jumps = qudit_ladder_jumps(n, d);
  auto rates = per_jump_rates(config.process.rates, jumps.size());
  for (std::size_t i = 0; i < jumps.size(); ++i) bundle.process.add_jump(jumps[i], rates[i]);
  bundle.target = computational_ket(space.dim(), 0);
  std::ostringstream desc;
  desc << "per-site ladder, n = " << n << ", d = " << d;
  bundle.description = desc.str();
  if (uniform_rates(config.process.rates)) {
    const double g = rates.empty() ? 1.0 : rates.front();
    bundle.family = [g, d](int m) {
      LindbladProcess p{CompositeSpace::qudits(m, d)};
      for (const auto& jump : qudit_ladder_jumps(m, d)) p.add_jump(jump, g);
      return p;
    };
  }
  return bundle;
}

ModelBundle build_aklt_model(const RunConfig& config) {
  if (config.process.constructor != "aklt") {
    throw std::invalid_argument("system kind 'spin1-chain' does not support constructor '" +
                                config.process.constructor + "'");
  }
  const bool periodic = config.system.boundary == "periodic";
  const AkltVariant variant =
      config.process.variant == "twirl" ? AkltVariant::Twirl : AkltVariant::Ladder;
  const double rate = shared_rate(config.process.rates);
  const int n_twirl = config.process.n_twirl;
  AkltModel model = aklt_model(config.system.n, periodic, variant, n_twirl, rate);
  std::optional<Vector> target;
  if (periodic) target = aklt_ground_state(model);
  ModelBundle bundle{std::move(model.process)};
  bundle.target = std::move(target);
  std::ostringstream desc;
  desc << "AKLT chain, n = " << config.system.n << ", " << (periodic ? "periodic" : "open") << ", "
       << config.process.variant << " jumps";
  bundle.description = desc.str();
  bundle.family = [periodic, variant, n_twirl, rate](int m) {
    return aklt_model(m, periodic, variant, n_twirl, rate).process;
  };
  return bundle;
}

ModelBundle build_bec_model(const RunConfig& config) {
  if (config.process.constructor != "bec") {
    throw std::invalid_argument("system kind 'bose-lattice' does not support constructor '" +
                                config.process.constructor + "'");
  }
  const bool periodic = config.system.boundary == "periodic";
  const double rate = shared_rate(config.process.rates);
  const double j_hop = config.process.j_hop;
  const double u_int = config.process.u_int;
  const int particles = config.system.particles;
  BecModel model = bec_model(config.system.sites, particles, periodic, j_hop, u_int, rate);
  ModelBundle bundle{std::move(model.process)};
  bundle.target = model.target;
  bundle.basis_dump = model.basis.dump();
  std::ostringstream desc;
  desc << "condensate pump, sites = " << config.system.sites << ", particles = " << particles << ", "
       << (periodic ? "periodic" : "open");
  bundle.description = desc.str();
  bundle.family = [particles, periodic, j_hop, u_int, rate](int m) {
    return bec_model(m, particles, periodic, j_hop, u_int, rate).process;
  };
  return bundle;
}

ModelBundle build_eta_model(const RunConfig& config) {
  if (config.process.constructor != "eta") {
    throw std::invalid_argument("system kind 'fermi-lattice' does not support constructor '" +
                                config.process.constructor + "'");
  }
  const double rate = shared_rate(config.process.rates);
  const double j_hop = config.process.j_hop;
  const double u_int = config.process.u_int;
  const int pairs = config.system.pairs;
  EtaModel model = eta_model(config.system.sites, pairs, j_hop, u_int, rate);
  ModelBundle bundle{std::move(model.process)};
  bundle.target = model.target;
  bundle.basis_dump = model.basis.dump();
  std::ostringstream desc;
  desc << "eta pairing pump, sites = " << config.system.sites << ", pairs = " << pairs;
  bundle.description = desc.str();
  bundle.family = [pairs, j_hop, u_int, rate](int m) {
    return eta_model(m, pairs, j_hop, u_int, rate).process;
  };
  return bundle;
}

ModelBundle build_model(const RunConfig& config) {
  const std::string& kind = config.system.kind;
  if (kind == "qubits") return build_qubit_model(config);
  if (kind == "qudits") return build_qudit_model(config);
  if (kind == "spin1-chain") return build_aklt_model(config);
  if (kind == "bose-lattice") return build_bec_model(config);
  if (kind == "fermi-lattice") return build_eta_model(config);
  throw std::invalid_argument("unknown system kind '" + kind + "'");
}

Storage storage_from(const std::string& mode) {
  if (mode == "dense") return Storage::Dense;
  if (mode == "sparse") return Storage::Sparse;
  return Storage::Auto;
}

std::string complex_str(const Complex& z) {
  return format_double(z.real()) + (z.imag() < 0 ? " - " : " + ") + format_double(std::abs(z.imag())) +
         "i";
}

class ArtifactWriter {
 public:
  ArtifactWriter(const OutputConfig& output, std::vector<std::string>& files)
      : dir_(output.directory), stem_(output.stem), files_(files) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create output directory " + dir_.string() + ": " + ec.message());
  }

  std::string path(const std::string& suffix) const { return (dir_ / (stem_ + suffix)).string(); }

  void write_text(const std::string& suffix, const std::string& text) {
    const std::string p = path(suffix);
    std::ofstream os(p);
    if (!os) throw IoError("cannot open " + p + " for writing");
    os << text;
    if (!os) throw IoError("write failed: " + p);
    files_.push_back(p);
  }

  template <typename Fn>
  void write_stream(const std::string& suffix, Fn&& fn) {
    const std::string p = path(suffix);
    std::ofstream os(p);
    if (!os) throw IoError("cannot open " + p + " for writing");
    fn(os);
    if (!os) throw IoError("write failed: " + p);
    files_.push_back(p);
  }

  void write_matrix(const std::string& suffix, const Matrix& m) {
    const std::string p = path(suffix);
    write_matrix_text_file(p, m);
    files_.push_back(p);
  }

 private:
  fs::path dir_;
  std::string stem_;
  std::vector<std::string>& files_;
};

void header_lines(std::ostringstream& os, const RunConfig& config, const ModelBundle& bundle) {
  os << "model: " << bundle.description << "\n";
  os << "hilbert_dim: " << bundle.process.dim() << "\n";
  os << "jump_count: " << bundle.process.jump_count() << "\n";
  os << "hamiltonian: " << (bundle.process.has_hamiltonian() ? "yes" : "no") << "\n";
  os << "task: " << config.task.kind << "\n";
}

SpectrumOptions spectral_options(const TaskConfig& task) {
  SpectrumOptions options;
  options.rank_rel_tol = task.tolerance;
  options.seed = task.seed;
  return options;
}

std::string run_spectrum(const RunConfig& config, const ModelBundle& bundle, ArtifactWriter& writer) {
  const Superoperator super = build_superoperator(bundle.process, storage_from(config.task.mode));
  const SpectrumMode mode = super.has_dense() ? SpectrumMode::Full : SpectrumMode::GapOnly;
  const SpectrumReport report = spectrum(super, mode, spectral_options(config.task));

  writer.write_stream("_spectrum.csv", [&](std::ostream& os) { write_spectrum_csv(os, report); });
  for (int i = 0; i < report.kernel_dim; ++i) {
    writer.write_matrix("_kernel_" + std::to_string(i) + ".mat", report.kernel_basis[i]);
  }

  std::ostringstream os;
  header_lines(os, config, bundle);
  os << "storage: " << (super.has_dense() ? "dense" : "sparse") << "\n";
  os << "mode: " << (mode == SpectrumMode::Full ? "full" : "gap-only") << "\n";
  os << "clusters: " << report.clusters.size() << "\n";
  os << "kernel_dim: " << report.kernel_dim << "\n";
  if (report.gap) {
    os << "gap: " << format_double(*report.gap) << "\n";
    os << "relaxation_time: " << format_double(relaxation_time(report)) << "\n";
  } else {
    os << "gap: none\n";
  }
  os << "imaginary_violations: " << report.imaginary_violations.size() << "\n";
  if (bundle.target && report.kernel_dim == 1) {
    os << "target_fidelity: " << format_double(state_fidelity(*bundle.target, report.kernel_basis[0]))
       << "\n";
  }
  for (const std::string& w : report.warnings) os << "warning: " << w << "\n";
  return os.str();
}

Matrix initial_state(const RunConfig& config, const ModelBundle& bundle) {
  const int dim = bundle.process.dim();
  const std::string& initial = config.task.initial;
  if (initial == "maximally-mixed") {
    return Matrix::Identity(dim, dim) / static_cast<double>(dim);
  }
  if (initial == "target") {
    if (!bundle.target) {
      throw std::invalid_argument("task.initial 'target' needs a model with a target state");
    }
    return *bundle.target * bundle.target->adjoint();
  }
  const std::string digits = initial.substr(6);  // "basis:<index>"
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("task.initial basis index must be a non-negative integer");
  }
  const long index = std::stol(digits);
  if (index >= dim) throw std::invalid_argument("task.initial basis index is out of range");
  Vector ket = computational_ket(dim, static_cast<int>(index));
  return ket * ket.adjoint();
}

std::string run_evolve(const RunConfig& config, const ModelBundle& bundle, ArtifactWriter& writer) {
  EvolveOptions options;
  options.storage = storage_from(config.task.mode);
  options.target = bundle.target;
  const Matrix rho0 = initial_state(config, bundle);
  const Trajectory trajectory =
      numeric_evolve(bundle.process, rho0, config.task.t_max, config.task.n_steps, options);

  writer.write_stream("_trajectory.csv", [&](std::ostream& os) { write_trajectory_csv(os, trajectory); });

  const TrajectorySample& last = trajectory.samples.back();
  std::ostringstream os;
  header_lines(os, config, bundle);
  os << "t_max: " << format_double(config.task.t_max) << "\n";
  os << "n_steps: " << config.task.n_steps << "\n";
  os << "initial: " << config.task.initial << "\n";
  if (bundle.target) os << "final_fidelity: " << format_double(last.fidelity) << "\n";
  os << "final_trace: " << format_double(last.trace_re) << "\n";
  os << "final_purity: " << format_double(last.purity) << "\n";
  os << "final_min_eigenvalue: " << format_double(last.min_eigenvalue) << "\n";
  return os.str();
}

std::string run_verify(const RunConfig& config, const ModelBundle& bundle, ArtifactWriter& writer) {
  const double tol = config.task.tolerance;
  std::ostringstream os;
  header_lines(os, config, bundle);

  if (bundle.target) {
    const Theorem1Report t1 = check_theorem1(bundle.process, *bundle.target, tol);
    os << "theorem1_stationary: " << (t1.stationary ? "yes" : "no") << "\n";
    os << "theorem1_lambda: " << complex_str(t1.lambda) << "\n";
    os << "theorem1_q_residual: " << format_double(t1.q_residual) << "\n";
    double worst = 0.0;
    for (double r : t1.jump_residuals) worst = std::max(worst, r);
    os << "theorem1_max_jump_residual: " << format_double(worst) << "\n";
    os << "theorem1_balance_residual: " << format_double(t1.balance_residual) << "\n";
  } else {
    os << "theorem1_stationary: skipped (no target state)\n";
  }

  const DarkSpaceResult dark = dark_space(bundle.process, tol);
  os << "dark_dim: " << dark.dim() << "\n";
  os << "dark_is_subspace: " << (dark.is_subspace ? "yes" : "no") << "\n";
  if (!dark.h_eigenvalues.empty()) {
    os << "dark_groups: " << dark.groups.size() << "\n";
    for (std::size_t g = 0; g < dark.groups.size(); ++g) {
      os << "dark_group_" << g << ": energy " << format_double(dark.h_eigenvalues[g]) << ", dim "
         << dark.groups[g].size() << "\n";
    }
  }
  for (const std::string& w : dark.warnings) os << "warning: " << w << "\n";

  std::vector<UniquenessCertificate> certificates;
  if (bundle.process.dim() <= kSparseDimLimit) {
    const Superoperator super = build_superoperator(bundle.process, storage_from(config.task.mode));
    certificates.push_back(kernel_dimension_certificate(super, tol, spectral_options(config.task)));
  } else {
    os << "note: kernel certificate skipped, dimension beyond the sparse limit\n";
  }
  if (bundle.target) {
    certificates.push_back(krylov_reachability(bundle.process.jump_operators(), *bundle.target, -1, tol));
  }
  certificates.push_back(invariant_subspace_probe(bundle.process, dark.vectors, tol));

  bool any_unique = false;
  bool any_refuted = false;
  for (const auto& cert : certificates) {
    any_unique = any_unique || cert.verdict == Verdict::Unique;
    any_refuted = any_refuted || cert.verdict == Verdict::NotUnique;
  }
  os << "unique_stationary: " << (any_refuted ? "refuted" : any_unique ? "yes" : "inconclusive") << "\n";
  for (const auto& cert : certificates) {
    os << "\n" << format_certificate(cert);
  }

  writer.write_text("_verify.txt", os.str());
  return os.str();
}

std::string run_gap_scan(const RunConfig& config, const ModelBundle& bundle, ArtifactWriter& writer) {
  if (!bundle.family) {
    throw std::invalid_argument(
        "gap-scan needs a size-parameterized family; this model (or a per-jump rate list) has none");
  }
  const GapScanResult scan = gap_scan(bundle.family, config.task.sizes, spectral_options(config.task));
  writer.write_stream("_scan.csv", [&](std::ostream& os) { write_scan_csv(os, scan); });

  std::ostringstream os;
  header_lines(os, config, bundle);
  for (const GapScanRow& row : scan.rows) {
    if (row.error.empty()) {
      os << "n " << row.n << ": gap " << format_double(row.gap) << ", relaxation_time "
         << format_double(row.relaxation) << "\n";
    } else {
      os << "n " << row.n << ": error: " << row.error << "\n";
    }
  }
  return os.str();
}

}  // namespace

RunArtifacts run(const RunConfig& config, const RunOverrides& overrides) {
  RunConfig cfg = config;
  if (overrides.tolerance) {
    if (*overrides.tolerance <= 0.0) throw ConfigError("task.tolerance", "must be positive");
    cfg.task.tolerance = *overrides.tolerance;
  }
  if (overrides.mode) {
    if (*overrides.mode != "dense" && *overrides.mode != "sparse") {
      throw ConfigError("task.mode", "override must be dense or sparse");
    }
    cfg.task.mode = *overrides.mode;
  }
  if (overrides.seed) cfg.task.seed = *overrides.seed;
  if (overrides.out_dir) {
    if (overrides.out_dir->empty()) throw ConfigError("output.directory", "must not be empty");
    cfg.output.directory = *overrides.out_dir;
  }

  ModelBundle bundle = build_model(cfg);
  RunArtifacts artifacts;
  ArtifactWriter writer(cfg.output, artifacts.files);
  if (bundle.basis_dump) writer.write_text("_basis.txt", *bundle.basis_dump);

  std::string summary;
  const std::string& kind = cfg.task.kind;
  if (kind == "spectrum") {
    summary = run_spectrum(cfg, bundle, writer);
    writer.write_text("_report.txt", summary);
  } else if (kind == "evolve") {
    summary = run_evolve(cfg, bundle, writer);
    writer.write_text("_report.txt", summary);
  } else if (kind == "verify") {
    summary = run_verify(cfg, bundle, writer);
  } else if (kind == "gap-scan") {
    summary = run_gap_scan(cfg, bundle, writer);
    writer.write_text("_report.txt", summary);
  } else {
    throw ConfigError("task.kind", "unknown task '" + kind + "'");
  }
  artifacts.summary = summary;
  return artifacts;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "lindprep: construct Lindblad processes that relax to a chosen pure state,\n"
      "then analyze their spectra, dynamics and stationary-state uniqueness."};
  std::string config_path;
  app.add_option("--config", config_path, "JSON run configuration")->required();
  double tol = 0.0;
  CLI::Option* tol_opt = app.add_option("--tol", tol, "override task.tolerance");
  bool dense = false;
  bool sparse = false;
  CLI::Option* dense_flag = app.add_flag("--dense", dense, "force dense superoperator storage");
  CLI::Option* sparse_flag = app.add_flag("--sparse", sparse, "force sparse superoperator storage");
  dense_flag->excludes(sparse_flag);
  sparse_flag->excludes(dense_flag);
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = app.add_option("--seed", seed, "override task.seed");
  std::string out_dir;
  CLI::Option* out_opt = app.add_option("--out", out_dir, "override output.directory");
  app.footer(
      "exit codes: 0 success, 1 unexpected error, 2 usage, 3 config error,\n"
      "            4 model error, 5 solver failure, 6 i/o error");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? static_cast<int>(ExitCode::kOk) : static_cast<int>(ExitCode::kUsage);
  }

  try {
    RunConfig config = load_config_file(config_path);
    RunOverrides overrides;
    if (tol_opt->count() > 0) overrides.tolerance = tol;
    if (dense) overrides.mode = "dense";
    if (sparse) overrides.mode = "sparse";
    if (seed_opt->count() > 0) overrides.seed = seed;
    if (out_opt->count() > 0) overrides.out_dir = out_dir;

    const RunArtifacts artifacts = run(config, overrides);
    std::cout << artifacts.summary;
    for (const std::string& file : artifacts.files) std::cout << "wrote: " << file << "\n";
    return static_cast<int>(ExitCode::kOk);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kConfig);
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kSolver);
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kIo);
  } catch (const std::invalid_argument& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kModel);
  } catch (const std::logic_error& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kModel);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kUnexpected);
  }
}

}  // namespace lindprep
