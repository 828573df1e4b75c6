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
#include <vector>

#include "lindprep/constructors.hpp"
#include "lindprep/operators.hpp"
#include "lindprep/process.hpp"
#include "lindprep/random.hpp"
#include "lindprep/superoperator.hpp"
#include "lindprep/types.hpp"
#include "lindprep/verification.hpp"
#include "oracles.hpp"

using namespace lindprep;

namespace {

LindbladProcess sigma_minus_process(int n, double rate = 1.0) {
  LindbladProcess process(CompositeSpace::qubits(n));
  for (const auto& jump : sigma_minus_jumps(n)) process.add_jump(jump, rate);
  return process;
}

// Independent check that phi*phi^dagger is stationary: evaluate the generator
// on it directly and measure the residual.
double generator_residual(const LindbladProcess& process, const Vector& phi) {
  Matrix rho = phi * phi.adjoint();
  Matrix out = apply_generator(process, rho);
  return max_abs(out);
}

}  // namespace

TEST_CASE("stationarity check accepts the decay ground state") {
  LindbladProcess process = sigma_minus_process(2, 0.8);
  Vector ground = Vector::Zero(4);
  ground(0) = 1;
  Theorem1Report report = check_theorem1(process, ground);
  CHECK(report.stationary);
  CHECK(std::abs(report.lambda) <= 1e-12);
  CHECK(report.q_residual <= 1e-12);
  REQUIRE(report.jump_eigenvalues.size() == 2);
  for (Complex ev : report.jump_eigenvalues) CHECK(std::abs(ev) <= 1e-12);
  CHECK(report.balance_residual <= 1e-12);
  CHECK(generator_residual(process, ground) <= 1e-12);
}

TEST_CASE("stationarity check handles jump eigenvalues away from zero") {
  // c = sigma_minus + mu gives c|0> = mu|0>. The cross terms the shift
  // introduces must be cancelled by H = i g mu |1><0| + h.c.; then
  // Q^dagger|0> = g|mu|^2 |0> and the balance condition closes.
  const Complex mu(0.6, -0.3);
  const double g = 1.3;
  LindbladProcess process(CompositeSpace::qubits(1));
  Matrix c = paulis::sigma_minus() + mu * Matrix::Identity(2, 2);
  process.add_jump(c, g);
  Matrix h = Matrix::Zero(2, 2);
  h(1, 0) = Complex(0, 1) * g * mu;
  h(0, 1) = std::conj(h(1, 0));
  process.set_hamiltonian(h);

  Vector ground = Vector::Zero(2);
  ground(0) = 1;
  Theorem1Report report = check_theorem1(process, ground);
  CHECK(report.stationary);
  REQUIRE(report.jump_eigenvalues.size() == 1);
  CHECK(std::abs(report.jump_eigenvalues[0] - mu) <= 1e-12);
  CHECK(std::abs(report.lambda - Complex(g * std::norm(mu), 0)) <= 1e-12);
  CHECK(report.balance_residual <= 1e-12);
  // dual route: the generator itself annihilates the projector
  CHECK(generator_residual(process, ground) <= 1e-12);
}

TEST_CASE("stationarity check rejects states the jumps move") {
  LindbladProcess process = sigma_minus_process(1);
  Vector plus(2);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  Theorem1Report report = check_theorem1(process, plus);
  CHECK_FALSE(report.stationary);
  CHECK(generator_residual(process, plus) > 1e-3);
}

TEST_CASE("stationarity check rejects hamiltonians that move the state") {
  LindbladProcess process = sigma_minus_process(1);
  process.set_hamiltonian(paulis::x());
  Vector ground = Vector::Zero(2);
  ground(0) = 1;
  CHECK_FALSE(check_theorem1(process, ground).stationary);
}

TEST_CASE("dark space of a single jump on two qubits is two dimensional") {
  LindbladProcess process(CompositeSpace::qubits(2));
  process.add_jump(embed_matrix(paulis::sigma_minus(), {0}, process.space()), 1.0);
  DarkSpaceResult dark = dark_space(process);
  CHECK(dark.dim() == 2);
  CHECK(dark.is_subspace);
  CHECK(dark.h_eigenvalues.empty());
  for (const Vector& v : dark.vectors) {
    CHECK((process.jumps()[0].op * v).norm() <= 1e-12);
  }
}

TEST_CASE("a hamiltonian splits the dark set into eigenvalue groups") {
  LindbladProcess process(CompositeSpace::qubits(2));
  process.add_jump(embed_matrix(paulis::sigma_minus(), {0}, process.space()), 1.0);
  process.set_hamiltonian(embed_matrix(paulis::z(), {1}, process.space()));
  DarkSpaceResult dark = dark_space(process);
  CHECK(dark.dim() == 2);
  CHECK_FALSE(dark.is_subspace);
  REQUIRE(dark.groups.size() == 2);
  REQUIRE(dark.h_eigenvalues.size() == 2);
  // one dark state per Z eigenvalue on the spectator qubit
  CHECK(dark.groups[0].size() == 1);
  CHECK(dark.groups[1].size() == 1);
  const Matrix& h = process.hamiltonian();
  for (std::size_t gidx = 0; gidx < dark.groups.size(); ++gidx) {
    for (int idx : dark.groups[gidx]) {
      const Vector& v = dark.vectors[idx];
      CHECK((h * v - dark.h_eigenvalues[gidx] * v).norm() <= 1e-10);
    }
  }
}

TEST_CASE("full dark space of the decay model is one dimensional") {
  DarkSpaceResult dark = dark_space(sigma_minus_process(3));
  REQUIRE(dark.dim() == 1);
  Vector ground = Vector::Zero(8);
  ground(0) = 1;
  CHECK(std::abs(std::abs(dark.vectors[0].dot(ground)) - 1.0) <= 1e-12);
}

TEST_CASE("krylov reachability certifies the decay model unique") {
  LindbladProcess process = sigma_minus_process(3);
  Vector ground = Vector::Zero(8);
  ground(0) = 1;
  UniquenessCertificate cert = krylov_reachability(process.jump_operators(), ground);
  CHECK(cert.method == CertificateMethod::KrylovReachability);
  CHECK(cert.verdict == Verdict::Unique);
  CHECK(cert.space_dim == 8);
  CHECK(cert.dimension_reached == 8);
}

TEST_CASE("krylov reachability stays inconclusive with a spectator qubit") {
  LindbladProcess process(CompositeSpace::qubits(2));
  process.add_jump(embed_matrix(paulis::sigma_minus(), {0}, process.space()), 1.0);
  Vector ground = Vector::Zero(4);
  ground(0) = 1;
  UniquenessCertificate cert = krylov_reachability(process.jump_operators(), ground);
  CHECK(cert.verdict == Verdict::Inconclusive);
  CHECK(cert.dimension_reached < 4);
}

TEST_CASE("kernel dimension certificate distinguishes unique from degenerate") {
  LindbladProcess unique = sigma_minus_process(2);
  UniquenessCertificate cert = kernel_dimension_certificate(build_superoperator(unique));
  CHECK(cert.verdict == Verdict::Unique);
  CHECK(cert.kernel_dim == 1);

  LindbladProcess degenerate(CompositeSpace::qubits(2));
  degenerate.add_jump(embed_matrix(paulis::sigma_minus(), {0}, degenerate.space()), 1.0);
  UniquenessCertificate cert2 = kernel_dimension_certificate(build_superoperator(degenerate));
  CHECK(cert2.verdict == Verdict::NotUnique);
  CHECK(cert2.kernel_dim == 4);  // 2x2 stationary block on the spectator qubit
}

TEST_CASE("invariant subspace probe finds a decoupled unitary block") {
  // c restricted to span{e0,e1} lowers e1 -> e0; on span{e2,e3} it acts as a
  // unitary, so that block never leaks and supports its own stationary state.
  std::mt19937_64 rng(21);
  Matrix u2 = random_unitary(2, rng);
  Matrix c = Matrix::Zero(4, 4);
  c(0, 1) = 1;
  c.block(2, 2, 2, 2) = u2;

  LindbladProcess process(CompositeSpace::single(4));
  process.add_jump(c, 1.0);
  DarkSpaceResult dark = dark_space(process);
  REQUIRE(dark.dim() == 1);  // e0 only

  UniquenessCertificate cert = invariant_subspace_probe(process, dark.vectors);
  CHECK(cert.method == CertificateMethod::InvariantSubspaceProbe);
  CHECK(cert.verdict == Verdict::NotUnique);
  REQUIRE(cert.dimension_reached == 2);
  REQUIRE(cert.witness.size() == 2);

  // the witness is orthogonal to the dark state and c-invariant
  Matrix w(4, 2);
  w << cert.witness[0], cert.witness[1];
  CHECK(max_abs(Matrix(dark.vectors[0].adjoint() * w)) <= 1e-10);
  Matrix leak = c * w - w * (w.adjoint() * c * w);
  CHECK(max_abs(leak) <= 1e-8);

  // cross-check: the generator kernel is indeed degenerate
  UniquenessCertificate kd = kernel_dimension_certificate(build_superoperator(process));
  CHECK(kd.verdict == Verdict::NotUnique);
}

TEST_CASE("invariant subspace probe is inconclusive on the decay qubit") {
  LindbladProcess process = sigma_minus_process(1);
  DarkSpaceResult dark = dark_space(process);
  REQUIRE(dark.dim() == 1);
  UniquenessCertificate cert = invariant_subspace_probe(process, dark.vectors);
  CHECK(cert.verdict == Verdict::Inconclusive);
  CHECK(cert.dimension_reached == 0);
}

TEST_CASE("probe without any dark state stays inconclusive") {
  // A unitary jump has an empty dark space; with nothing to contradict, the
  // probe must not claim a refutation even though the full space is invariant.
  LindbladProcess process(CompositeSpace::single(2));
  process.add_jump(Matrix(Complex(0, 1) * paulis::z()), 0.5);
  process.set_hamiltonian(paulis::x());
  DarkSpaceResult dark = dark_space(process);
  REQUIRE(dark.dim() == 0);
  UniquenessCertificate cert = invariant_subspace_probe(process, dark.vectors);
  CHECK(cert.verdict == Verdict::Inconclusive);

  // this particular model really does have a unique stationary state (I/2),
  // so any not-unique verdict here would be a false refutation
  UniquenessCertificate kd = kernel_dimension_certificate(build_superoperator(process));
  CHECK(kd.verdict == Verdict::Unique);
}

TEST_CASE("a hamiltonian bridging the blocks removes the witness") {
  // Same decoupled-block jump as above, but H = |1><2| + |2><1| lets the
  // damping operator K leak the unitary block into the decaying one.
  std::mt19937_64 rng(22);
  Matrix u2 = random_unitary(2, rng);
  Matrix c = Matrix::Zero(4, 4);
  c(0, 1) = 1;
  c.block(2, 2, 2, 2) = u2;
  Matrix h = Matrix::Zero(4, 4);
  h(1, 2) = 1;
  h(2, 1) = 1;

  LindbladProcess process(CompositeSpace::single(4));
  process.add_jump(c, 1.0);
  process.set_hamiltonian(h);
  DarkSpaceResult dark = dark_space(process);
  REQUIRE(dark.dim() == 1);
  UniquenessCertificate cert = invariant_subspace_probe(process, dark.vectors);
  CHECK(cert.verdict == Verdict::Inconclusive);
  CHECK(cert.dimension_reached == 0);
}

TEST_CASE("certificate formatting carries the verdict") {
  LindbladProcess process = sigma_minus_process(1);
  UniquenessCertificate cert = kernel_dimension_certificate(build_superoperator(process));
  std::string text = format_certificate(cert);
  CHECK(text.find("method: kernel-dimension") != std::string::npos);
  CHECK(text.find("verdict: unique") != std::string::npos);
  CHECK(text.find("kernel_dim: 1") != std::string::npos);
}
