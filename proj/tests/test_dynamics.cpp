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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "lindprep/constructors.hpp"
#include "lindprep/dynamics.hpp"
#include "lindprep/operators.hpp"
#include "lindprep/process.hpp"
#include "lindprep/random.hpp"
#include "lindprep/types.hpp"
#include "oracles.hpp"

using namespace lindprep;

namespace {

LindbladProcess decay_process(int n, const std::vector<double>& rates) {
  LindbladProcess process(CompositeSpace::qubits(n));
  auto jumps = sigma_minus_jumps(n);
  for (int k = 0; k < n; ++k) process.add_jump(jumps[k], rates[k]);
  return process;
}

Matrix maximally_mixed(int dim) { return Matrix::Identity(dim, dim) / static_cast<double>(dim); }

}  // namespace

TEST_CASE("single qubit decay matches the closed-form populations") {
  const double g = 0.8;
  LindbladProcess process = decay_process(1, {g});
  Matrix rho0 = Matrix::Zero(2, 2);
  rho0(1, 1) = 1;  // excited state
  std::vector<double> times{0.0, 0.3, 1.0, 2.5};
  auto states = numeric_evolve_states(process, rho0, times);
  REQUIRE(states.size() == times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double p = std::exp(-2.0 * g * times[i]);  // excited population decays at 2g
    CHECK(std::abs(states[i](1, 1).real() - p) <= 1e-10);
    CHECK(std::abs(states[i](0, 0).real() - (1.0 - p)) <= 1e-10);
    CHECK(std::abs(states[i](0, 1)) <= 1e-12);
  }
}

TEST_CASE("coherences decay at the sum of the rates") {
  const double g = 1.1;
  LindbladProcess process = decay_process(1, {g});
  Matrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  auto states = numeric_evolve_states(process, plus, {0.0, 0.7});
  // off-diagonal element evolves as exp(-g t)
  CHECK(std::abs(states[1](0, 1).real() - 0.5 * std::exp(-g * 0.7)) <= 1e-10);
}

TEST_CASE("trajectory preserves trace and relaxes onto the target") {
  LindbladProcess process = decay_process(2, {1.0, 0.6});
  Vector target = Vector::Zero(4);
  target(0) = 1;
  EvolveOptions options;
  options.target = target;
  Trajectory traj = numeric_evolve(process, maximally_mixed(4), 12.0, 60, options);
  REQUIRE(traj.samples.size() == 61);
  CHECK(traj.samples.front().t == doctest::Approx(0.0));
  CHECK(traj.samples.back().t == doctest::Approx(12.0));
  for (const auto& s : traj.samples) {
    CHECK(std::abs(s.trace_re - 1.0) <= 1e-9);
    CHECK(s.min_eigenvalue >= -1e-9);
  }
  CHECK(traj.samples.front().fidelity == doctest::Approx(0.25));
  CHECK(traj.samples.back().fidelity >= 1.0 - 1e-6);
  // fidelity against the unique stationary state grows monotonically here
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    CHECK(traj.samples[i].fidelity >= traj.samples[i - 1].fidelity - 1e-12);
  }
}

TEST_CASE("propagator and runge-kutta integrators agree") {
  std::mt19937_64 rng(11);
  LindbladProcess process = decay_process(2, {1.0, 0.5});
  process.set_hamiltonian(Matrix(embed_matrix(paulis::x(), {0}, process.space()) +
                                 0.3 * embed_matrix(paulis::z(), {1}, process.space())));
  Matrix rho0 = random_density(4, rng);
  std::vector<double> times{0.0, 0.5, 1.5};

  EvolveOptions dense;
  dense.storage = Storage::Dense;
  EvolveOptions sparse;
  sparse.storage = Storage::Sparse;
  sparse.rate_step_cap = 0.01;  // fourth-order error well below the bound
  auto a = numeric_evolve_states(process, rho0, times, dense);
  auto b = numeric_evolve_states(process, rho0, times, sparse);
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(max_abs(Matrix(a[i] - b[i])) <= 1e-8);
  }
}

TEST_CASE("closed form evolution matches the integrator") {
  std::mt19937_64 rng(12);
  const int n = 3;
  const int dim = 1 << n;
  std::vector<double> rates{1.0, 0.4, 1.7};
  Matrix u = random_unitary(dim, rng);

  LindbladProcess process(CompositeSpace::qubits(n));
  auto rotated = conjugated_jumps(u, sigma_minus_jumps(n));
  for (int k = 0; k < n; ++k) process.add_jump(rotated[k].matrix, rates[k]);

  Matrix rho0 = random_density(dim, rng);
  std::vector<double> times{0.0, 0.2, 0.9, 2.0};
  auto analytic = analytic_evolve(u, rates, rho0, times);
  auto numeric = numeric_evolve_states(process, rho0, times);
  REQUIRE(analytic.size() == numeric.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(max_abs(Matrix(analytic[i] - numeric[i])) <= 1e-8);
  }
}

TEST_CASE("closed form evolution fixes the rotated ground state") {
  std::mt19937_64 rng(13);
  Matrix u = random_unitary(4, rng);
  Vector ground = Vector::Zero(4);
  ground(0) = 1;
  Vector target = u * ground;
  Matrix rho0 = target * target.adjoint();
  auto states = analytic_evolve(u, {1.0, 2.0}, rho0, {0.0, 3.0});
  CHECK(max_abs(Matrix(states[1] - rho0)) <= 1e-12);
}

TEST_CASE("evolution requires sane inputs") {
  LindbladProcess process = decay_process(1, {1.0});
  Matrix rho0 = maximally_mixed(2);
  CHECK_THROWS_AS(numeric_evolve(process, rho0, -1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(numeric_evolve(process, rho0, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(numeric_evolve_states(process, rho0, {1.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(numeric_evolve_states(process, Matrix::Zero(3, 3), {0.0}), std::invalid_argument);
}

TEST_CASE("gap scan reports uniform gaps for the decay family") {
  auto family = [](int n) {
    LindbladProcess process(CompositeSpace::qubits(n));
    for (const auto& jump : sigma_minus_jumps(n)) process.add_jump(jump, 1.0);
    return process;
  };
  GapScanResult scan = gap_scan(family, {1, 2, 3, 4, 5, 6});
  REQUIRE(scan.rows.size() == 6);
  for (const auto& row : scan.rows) {
    CHECK(row.error.empty());
    CHECK(std::abs(row.gap - 1.0) <= 1e-6);
    CHECK(std::abs(row.relaxation - 1.0) <= 1e-6);
  }
}

TEST_CASE("gap scan records per-size failures and continues") {
  auto family = [](int n) {
    if (n == 3) throw std::invalid_argument("size three is not admissible here");
    LindbladProcess process(CompositeSpace::qubits(n));
    for (const auto& jump : sigma_minus_jumps(n)) process.add_jump(jump, 1.0);
    return process;
  };
  GapScanResult scan = gap_scan(family, {2, 3, 4});
  REQUIRE(scan.rows.size() == 3);
  CHECK(scan.rows[0].error.empty());
  CHECK_FALSE(scan.rows[1].error.empty());
  CHECK(std::isnan(scan.rows[1].gap));
  CHECK(scan.rows[2].error.empty());
  CHECK(std::abs(scan.rows[2].gap - 1.0) <= 1e-6);

  std::ostringstream os;
  write_scan_csv(os, scan);
  CHECK(os.str().find("nan") != std::string::npos);
}

TEST_CASE("trajectory csv has one row per sample") {
  LindbladProcess process = decay_process(1, {1.0});
  Trajectory traj = numeric_evolve(process, maximally_mixed(2), 1.0, 4);
  std::ostringstream os;
  write_trajectory_csv(os, traj);
  std::string text = os.str();
  int lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines == 6);  // header plus five samples
  CHECK(text.rfind("t,fidelity,trace,purity,min_eig", 0) == 0);
}
