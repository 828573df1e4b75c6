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

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lindprep/process.hpp"
#include "lindprep/spectrum.hpp"
#include "lindprep/types.hpp"

namespace lindprep {

struct TrajectorySample {
  double t = 0.0;
  double fidelity = 0.0;        // <target| rho |target>, NaN without a target
  double trace_re = 0.0;
  double purity = 0.0;          // tr rho^2
  double min_eigenvalue = 0.0;  // of the hermitized state
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
};

/// CSV rows "t,fidelity,trace,purity,min_eig".
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory);

struct EvolveOptions {
  Storage storage = Storage::Auto;  // Auto: propagator exponential up to
                                    // kDenseDimLimit, fixed-step RK4 beyond
  double rate_step_cap = 0.05;      // RK4 substep bound: g_max * dt <= cap
  double positivity_floor = -1e-6;  // abort below this minimum eigenvalue
  std::optional<Vector> target;     // fidelity reference
};

/// Propagate rho0 and sample observables at n_steps+1 uniform times in
/// [0, t_max]. The state is hermitized at each sample; positivity is
/// monitored, not enforced, and a violation below the floor aborts with a
/// step-size diagnostic. Throws SolverError on abort.
Trajectory numeric_evolve(const LindbladProcess& process, const Matrix& rho0, double t_max, int n_steps,
                          const EvolveOptions& options = {});

/// Propagated states at the given ascending times (first must be >= 0).
std::vector<Matrix> numeric_evolve_states(const LindbladProcess& process, const Matrix& rho0,
                                          const std::vector<double>& times, const EvolveOptions& options = {});

/// Closed-form evolution for processes with jumps u sigma_minus^(k) u^dagger
/// and rates g_k: the conjugated initial state is expanded per site in the
/// eigenbasis {|0><0|, sigma_x, sigma_y, sigma_z} with eigenvalues
/// {0, -g, -g, -2g} and each component evolves by its exponential factor.
std::vector<Matrix> analytic_evolve(const Matrix& u, const std::vector<double>& rates, const Matrix& rho0,
                                    const std::vector<double>& times, double rel_tol = 1e-10);

struct GapScanRow {
  int n = 0;
  double gap = 0.0;
  double relaxation = 0.0;
  std::string error;  // nonempty when the size failed; gap/relaxation are NaN
};

struct GapScanResult {
  std::vector<GapScanRow> rows;
};

/// Build the family member at each size and extract the spectral gap, dense
/// up to total_dim 32 and sparse gap-only beyond. Per-size errors are
/// recorded on their row and the scan continues.
GapScanResult gap_scan(const std::function<LindbladProcess(int)>& family, const std::vector<int>& sizes,
                       const SpectrumOptions& options = {});

/// CSV rows "n,gap,relaxation_time" (NaN fields for failed rows).
void write_scan_csv(std::ostream& os, const GapScanResult& scan);

}  // namespace lindprep
