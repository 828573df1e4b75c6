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

#include "lindprep/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "lindprep/superoperator.hpp"

namespace lindprep {

namespace {

struct Stepper {
  Superoperator super;
  bool use_propagator;
  double substep_scale;  // rate scale entering the RK4 substep count

  // propagator cache
  double cached_dt = -1.0;
  Matrix propagator;

  double rate_step_cap;

  Stepper(const LindbladProcess& process, const EvolveOptions& options)
      : super(build_superoperator(process, options.storage)),
        use_propagator(super.has_dense()),
        rate_step_cap(options.rate_step_cap) {
    double scale = process.max_rate();
    if (process.has_hamiltonian()) scale = std::max(scale, max_abs(process.hamiltonian()));
    substep_scale = scale;
  }

  void advance(Vector& w, double dt) {
    if (dt == 0.0) return;
    if (dt < 0.0) throw std::invalid_argument("evolve: negative time step");
    if (use_propagator) {
      if (dt != cached_dt) {
        propagator = (super.dense() * dt).exp();
        cached_dt = dt;
      }
      w = propagator * w;
      return;
    }
    int substeps = 1;
    if (substep_scale > 0.0 && rate_step_cap > 0.0) {
      substeps = std::max(1, static_cast<int>(std::ceil(substep_scale * dt / rate_step_cap)));
    }
    double h = dt / substeps;
    for (int s = 0; s < substeps; ++s) {
      Vector k1 = super.apply(w);
      Vector k2 = super.apply(w + (h / 2.0) * k1);
      Vector k3 = super.apply(w + (h / 2.0) * k2);
      Vector k4 = super.apply(w + h * k3);
      w += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
};

void validate_initial_state(const Matrix& rho0, int dim) {
  if (rho0.rows() != dim || rho0.cols() != dim) {
    throw std::invalid_argument("evolve: initial state dimension mismatch");
  }
  if (!is_density_matrix(rho0, 1e-8)) {
    throw std::invalid_argument("evolve: the initial state is not a density matrix");
  }
}

TrajectorySample sample_state(const Matrix& rho, double t, const std::optional<Vector>& target) {
  TrajectorySample sample;
  sample.t = t;
  Matrix herm = (rho + rho.adjoint()) / 2.0;
  sample.trace_re = herm.trace().real();
  sample.purity = (herm * herm).trace().real();
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  sample.min_eigenvalue =
      es.info() == Eigen::Success ? es.eigenvalues().minCoeff() : std::numeric_limits<double>::quiet_NaN();
  if (target.has_value()) {
    sample.fidelity = state_fidelity(*target, herm);
  } else {
    sample.fidelity = std::numeric_limits<double>::quiet_NaN();
  }
  return sample;
}

}  // namespace

Trajectory numeric_evolve(const LindbladProcess& process, const Matrix& rho0, double t_max, int n_steps,
                          const EvolveOptions& options) {
  if (t_max <= 0.0) throw std::invalid_argument("numeric_evolve: t_max must be positive");
  if (n_steps < 1) throw std::invalid_argument("numeric_evolve: need at least one step");
  validate_initial_state(rho0, process.dim());
  if (options.target.has_value() && options.target->size() != process.dim()) {
    throw std::invalid_argument("numeric_evolve: target dimension mismatch");
  }
  std::optional<Vector> target = options.target;
  if (target.has_value()) target->normalize();

  Stepper stepper(process, options);
  const double dt = t_max / n_steps;
  Vector w = vec(rho0);
  Trajectory trajectory;
  trajectory.samples.reserve(static_cast<size_t>(n_steps) + 1);

  for (int step = 0; step <= n_steps; ++step) {
    double t = dt * step;
    if (step > 0) stepper.advance(w, dt);
    Matrix rho = unvec(w, process.dim());
    rho = (rho + rho.adjoint()) / 2.0;
    w = vec(rho);
    TrajectorySample sample = sample_state(rho, t, target);
    if (sample.min_eigenvalue < options.positivity_floor) {
      std::ostringstream msg;
      msg << "numeric_evolve: positivity violated at t=" << format_double(t) << " (min eigenvalue "
          << format_double(sample.min_eigenvalue) << ", floor " << format_double(options.positivity_floor)
          << "); step size " << format_double(dt)
          << " may be too coarse for the rates, try more steps or the dense propagator";
      throw SolverError(msg.str());
    }
    trajectory.samples.push_back(sample);
  }
  return trajectory;
}

std::vector<Matrix> numeric_evolve_states(const LindbladProcess& process, const Matrix& rho0,
                                          const std::vector<double>& times, const EvolveOptions& options) {
  validate_initial_state(rho0, process.dim());
  if (times.empty()) return {};
  if (times.front() < 0.0) throw std::invalid_argument("numeric_evolve_states: negative time");
  for (size_t i = 1; i < times.size(); ++i) {
    if (times[i] < times[i - 1]) throw std::invalid_argument("numeric_evolve_states: times must ascend");
  }

  Stepper stepper(process, options);
  Vector w = vec(rho0);
  std::vector<Matrix> states;
  states.reserve(times.size());
  double t = 0.0;
  for (double target_t : times) {
    stepper.advance(w, target_t - t);
    t = target_t;
    states.push_back(unvec(w, process.dim()));
  }
  return states;
}

std::vector<Matrix> analytic_evolve(const Matrix& u, const std::vector<double>& rates, const Matrix& rho0,
                                    const std::vector<double>& times, double rel_tol) {
  const int n = static_cast<int>(rates.size());
  if (n < 1) throw std::invalid_argument("analytic_evolve: no rates");
  long dim = 1L << n;
  if (u.rows() != dim || u.cols() != dim) {
    throw std::invalid_argument("analytic_evolve: unitary must act on 2^n with n the rate count");
  }
  if (rho0.rows() != dim || rho0.cols() != dim) {
    throw std::invalid_argument("analytic_evolve: state dimension mismatch");
  }
  if (!is_unitary(u, rel_tol)) throw std::invalid_argument("analytic_evolve: matrix is not unitary");
  for (double g : rates) {
    if (g < 0.0) throw std::invalid_argument("analytic_evolve: negative rate");
  }

  // single-site eigenbasis of the lowering-operator generator, vectorized
  // column-major: columns |0><0|, sigma_x, sigma_y, sigma_z with eigenvalues
  // 0, -g, -g, -2g
  Matrix basis(4, 4);
  basis.col(0) = vec((Matrix(2, 2) << 1, 0, 0, 0).finished());
  basis.col(1) = vec(paulis::x());
  basis.col(2) = vec(paulis::y());
  basis.col(3) = vec(paulis::z());
  Matrix basis_inv = basis.inverse();

  CompositeSpace space = CompositeSpace::qubits(n);
  Matrix rotated = u.adjoint() * rho0 * u;
  Vector w0 = vec(rotated);

  std::vector<Matrix> out;
  out.reserve(times.size());
  for (double t : times) {
    if (t < 0.0) throw std::invalid_argument("analytic_evolve: negative time");
    Vector w = w0;
    for (int k = 0; k < n; ++k) {
      double g = rates[static_cast<size_t>(k)];
      Eigen::Vector4cd decay;
      decay << 1.0, std::exp(-g * t), std::exp(-g * t), std::exp(-2.0 * g * t);
      Matrix e_local = basis * decay.asDiagonal() * basis_inv;

      // apply the 4x4 map on the (row, column) digit pair of site k
      long stride = space.stride(k);
      long row_step = stride;          // flips the row digit of site k
      long col_step = stride * dim;    // flips the column digit of site k
      for (long base = 0; base < dim * dim; ++base) {
        long r = base % dim;
        long c = base / dim;
        if ((r / stride) % 2 != 0 || (c / stride) % 2 != 0) continue;
        Eigen::Vector4cd local;
        local << w(base), w(base + row_step), w(base + col_step), w(base + row_step + col_step);
        // local index a = r_k + 2 c_k
        Eigen::Vector4cd updated = e_local * local;
        w(base) = updated(0);
        w(base + row_step) = updated(1);
        w(base + col_step) = updated(2);
        w(base + row_step + col_step) = updated(3);
      }
    }
    Matrix rho = unvec(w, static_cast<int>(dim));
    out.push_back(u * rho * u.adjoint());
  }
  return out;
}

GapScanResult gap_scan(const std::function<LindbladProcess(int)>& family, const std::vector<int>& sizes,
                       const SpectrumOptions& options) {
  GapScanResult result;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int n : sizes) {
    GapScanRow row;
    row.n = n;
    try {
      LindbladProcess process = family(n);
      int d = process.dim();
      SpectrumReport report;
      if (d <= 32) {
        Superoperator super = build_superoperator(process, Storage::Dense);
        report = spectrum(super, SpectrumMode::Full, options);
      } else if (d <= kSparseDimLimit) {
        Superoperator super = build_superoperator(process, Storage::Sparse);
        report = spectrum(super, SpectrumMode::GapOnly, options);
      } else {
        throw std::invalid_argument("total dimension " + std::to_string(d) + " exceeds the sparse limit");
      }
      if (!report.gap.has_value()) throw SolverError("no spectral gap identified");
      row.gap = *report.gap;
      row.relaxation = 1.0 / row.gap;
    } catch (const std::exception& e) {
      row.gap = nan;
      row.relaxation = nan;
      row.error = e.what();
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory) {
  os << "t,fidelity,trace,purity,min_eig\n";
  for (const TrajectorySample& s : trajectory.samples) {
    os << format_double(s.t) << "," << format_double(s.fidelity) << "," << format_double(s.trace_re) << ","
       << format_double(s.purity) << "," << format_double(s.min_eigenvalue) << "\n";
  }
}

void write_scan_csv(std::ostream& os, const GapScanResult& scan) {
  os << "n,gap,relaxation_time\n";
  for (const GapScanRow& row : scan.rows) {
    os << row.n << "," << format_double(row.gap) << "," << format_double(row.relaxation) << "\n";
  }
}

}  // namespace lindprep
