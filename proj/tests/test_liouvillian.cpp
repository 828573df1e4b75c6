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

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "lindprep/arnoldi.hpp"
#include "lindprep/constructors.hpp"
#include "lindprep/operators.hpp"
#include "lindprep/process.hpp"
#include "lindprep/random.hpp"
#include "lindprep/spectrum.hpp"
#include "lindprep/superoperator.hpp"
#include "oracles.hpp"

using namespace lindprep;

namespace {

double diff(const Matrix& a, const Matrix& b) { return max_abs(Matrix(a - b)); }

LindbladProcess decay_chain(int n, const std::vector<double>& rates) {
  LindbladProcess process{CompositeSpace::qubits(n)};
  auto jumps = sigma_minus_jumps(n);
  for (int k = 0; k < n; ++k) process.add_jump(jumps[k], rates[k]);
  return process;
}

/// Multiset comparison of spectra through sorted (re, im) lists with
/// multiplicities expanded.
std::vector<Complex> expanded_sorted(const std::vector<EigenvalueCluster>& clusters) {
  std::vector<Complex> out;
  for (const auto& c : clusters) {
    for (int i = 0; i < c.multiplicity; ++i) out.push_back(c.value);
  }
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

}  // namespace

TEST_CASE("vec and unvec stack columns") {
  std::mt19937_64 rng(1);
  Matrix m = random_matrix(3, 3, rng);
  Vector v = vec(m);
  CHECK(v(0) == m(0, 0));
  CHECK(v(1) == m(1, 0));  // column-major
  CHECK(v(3) == m(0, 1));
  CHECK(diff(unvec(v, 3), m) == 0);

  Matrix a = random_matrix(3, 3, rng), b = random_matrix(3, 3, rng);
  // vec(A m B) = (B^T kron A) vec(m)
  Vector lhs = vec(Matrix(a * m * b));
  Vector rhs = oracle::kron(b.transpose(), a) * v;
  CHECK((lhs - rhs).norm() <= 1e-12);
}

TEST_CASE("assembled superoperator matches the direct generator action") {
  std::mt19937_64 rng(2);
  LindbladProcess process = decay_chain(2, {1.0, 0.6});
  Matrix h = random_hermitian(4, rng);
  process.set_hamiltonian(h);

  Superoperator super = build_superoperator(process, Storage::Dense);
  const int d = 4;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Matrix basis = Matrix::Zero(d, d);
      basis(i, j) = 1;
      Vector via_matrix = super.dense() * vec(basis);
      Vector via_action = vec(apply_generator(process, basis));
      CHECK((via_matrix - via_action).norm() <= 1e-12 * super.scale());
    }
  }

  SUBCASE("sparse storage agrees entrywise") {
    Superoperator sparse = build_superoperator(process, Storage::Sparse);
    CHECK(diff(Matrix(sparse.sparse()), super.dense()) <= 1e-14 * super.scale());
    CHECK(sparse.scale() == doctest::Approx(super.scale()));
  }

  SUBCASE("apply matches the matrix") {
    Vector v = vec(random_density(d, rng));
    CHECK((super.apply(v) - super.dense() * v).norm() <= 1e-12 * super.scale());
  }
}

TEST_CASE("generator preserves trace and hermiticity") {
  std::mt19937_64 rng(3);
  LindbladProcess process = decay_chain(2, {0.8, 1.3});
  process.set_hamiltonian(random_hermitian(4, rng));
  Superoperator super = build_superoperator(process);

  // trace preservation: the identity row annihilates the generator
  Vector id = vec(Matrix(Matrix::Identity(4, 4)));
  CHECK((id.adjoint() * super.dense()).norm() <= 1e-12 * super.scale());

  for (int t = 0; t < 20; ++t) {
    Matrix sigma = random_matrix(4, 4, rng);
    Matrix image = apply_generator(process, sigma);
    Matrix image_adj = apply_generator(process, Matrix(sigma.adjoint()));
    CHECK(std::abs(apply_generator(process, random_density(4, rng)).trace()) <= 1e-12);
    CHECK(diff(image_adj, Matrix(image.adjoint())) <= 1e-11);
  }
}

TEST_CASE("single-qubit decay spectrum is {0, -g, -g, -2g}") {
  const double g = 1.7;
  LindbladProcess process = decay_chain(1, {g});
  SpectrumReport report = spectrum(build_superoperator(process), SpectrumMode::Full);

  std::vector<Complex> values = expanded_sorted(report.clusters);
  REQUIRE(values.size() == 4);
  CHECK(std::abs(values[0] - Complex(-2 * g, 0)) <= 1e-12);
  CHECK(std::abs(values[1] - Complex(-g, 0)) <= 1e-12);
  CHECK(std::abs(values[2] - Complex(-g, 0)) <= 1e-12);
  CHECK(std::abs(values[3]) <= 1e-12);
  CHECK(report.kernel_dim == 1);
  CHECK(report.kernel_basis[0].trace().real() == doctest::Approx(1.0));
  REQUIRE(report.gap.has_value());
  CHECK(*report.gap == doctest::Approx(g));
  CHECK(relaxation_time(report) == doctest::Approx(1.0 / g));
}

TEST_CASE("two-qubit spectrum is the sumset of the single-site spectra") {
  const std::vector<double> rates{1.0, 0.7};
  LindbladProcess process = decay_chain(2, rates);
  SpectrumReport report = spectrum(build_superoperator(process), SpectrumMode::Full);

  std::vector<Complex> expected;
  for (double a : {0.0, -rates[0], -rates[0], -2 * rates[0]}) {
    for (double b : {0.0, -rates[1], -rates[1], -2 * rates[1]}) {
      expected.push_back(Complex(a + b, 0));
    }
  }
  std::sort(expected.begin(), expected.end(),
            [](const Complex& a, const Complex& b) { return a.real() < b.real(); });

  std::vector<Complex> got = expanded_sorted(report.clusters);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - expected[i]) <= 1e-8);
  CHECK(report.kernel_dim == 1);
}

TEST_CASE("kernel dimension agrees with elimination on the dense matrix") {
  SUBCASE("unique stationary state") {
    LindbladProcess process = decay_chain(2, {1.0, 0.5});
    Superoperator super = build_superoperator(process);
    SpectrumReport report = spectrum(super, SpectrumMode::Full);
    CHECK(report.kernel_dim == oracle::nullspace_dim(super.dense(), 1e-8 * super.scale()));
  }
  SUBCASE("degenerate stationary space") {
    // one decaying qubit next to an untouched one: kernel = |0><0| x B(C^2)
    LindbladProcess process{CompositeSpace::qubits(2)};
    process.add_jump(sigma_minus_jumps(2)[0], 1.0);
    Superoperator super = build_superoperator(process);
    SpectrumReport report = spectrum(super, SpectrumMode::Full);
    CHECK(report.kernel_dim == 4);
    CHECK(report.kernel_dim == oracle::nullspace_dim(super.dense(), 1e-8 * super.scale()));
  }
}

TEST_CASE("stationary space of the decay chain is the lowest projector") {
  LindbladProcess process = decay_chain(2, {1.0, 2.0});
  NullspaceResult result = stationary_space(build_superoperator(process));
  REQUIRE(result.basis.size() == 1);
  Vector ground = Vector::Zero(4);
  ground(0) = 1;
  Matrix rho = result.basis[0];
  rho /= rho.trace();
  CHECK(state_fidelity(ground, rho) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("spectrum is invariant under unitary conjugation of the jumps") {
  std::mt19937_64 rng(4);
  LindbladProcess base = decay_chain(2, {1.0, 0.4});
  Matrix u = random_unitary(4, rng);
  LindbladProcess conjugated{CompositeSpace::qubits(2)};
  auto rotated = conjugated_jumps(u, sigma_minus_jumps(2));
  conjugated.add_jump(rotated[0].matrix, 1.0);
  conjugated.add_jump(rotated[1].matrix, 0.4);

  auto a = expanded_sorted(spectrum(build_superoperator(base), SpectrumMode::Full).clusters);
  auto b = expanded_sorted(spectrum(build_superoperator(conjugated), SpectrumMode::Full).clusters);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-7);
}

TEST_CASE("eigenvalue clustering merges near-duplicates") {
  std::vector<Complex> values{{0, 0}, {1e-12, -1e-12}, {-1, 0}, {-1 + 2e-9, 0}, {-2, 1}};
  auto clusters = cluster_eigenvalues(values, 1e-8);
  CHECK(clusters.size() == 3);
  int total = 0;
  for (const auto& c : clusters) total += c.multiplicity;
  CHECK(total == 5);
}

TEST_CASE("shift-invert arnoldi recovers the eigenvalues nearest the shift") {
  // block-diagonal with known spectrum: 0, -0.3, -1 +/- 2i, -4, -5
  const int d = 6;
  std::vector<Eigen::Triplet<Complex>> entries;
  auto put = [&](int i, int j, Complex v) { entries.emplace_back(i, j, v); };
  put(0, 0, {0, 0});
  put(1, 1, {-0.3, 0});
  put(2, 2, {-1, 0});
  put(2, 3, {2, 0});
  put(3, 2, {-2, 0});
  put(3, 3, {-1, 0});
  put(4, 4, {-4, 0});
  put(5, 5, {-5, 0});
  SparseCMatrix m(d, d);
  m.setFromTriplets(entries.begin(), entries.end());

  ArnoldiOptions options;
  options.nev = 4;
  ArnoldiResult result = shift_invert_eigs(m, Complex(0.05, 0), options);
  REQUIRE(result.values.size() >= 4);
  std::vector<double> re;
  for (int i = 0; i < 4; ++i) re.push_back(result.values[i].real());
  std::sort(re.begin(), re.end());
  CHECK(std::abs(re[0] - (-1.0)) <= 1e-9);
  CHECK(std::abs(re[1] - (-1.0)) <= 1e-9);
  CHECK(std::abs(re[2] - (-0.3)) <= 1e-9);
  CHECK(std::abs(re[3] - 0.0) <= 1e-9);
  for (int i = 0; i < 4; ++i) CHECK(result.residuals[i] <= 1e-8);
}

TEST_CASE("gap-only sparse mode agrees with the dense gap") {
  LindbladProcess process = decay_chain(2, {1.0, 0.6});
  SpectrumReport dense = spectrum(build_superoperator(process, Storage::Dense), SpectrumMode::Full);
  SpectrumReport sparse =
      spectrum(build_superoperator(process, Storage::Sparse), SpectrumMode::GapOnly);
  REQUIRE(dense.gap.has_value());
  REQUIRE(sparse.gap.has_value());
  CHECK(*sparse.gap == doctest::Approx(*dense.gap).epsilon(1e-8));
  CHECK(sparse.kernel_dim == 1);
}

TEST_CASE("full mode requires dense storage") {
  LindbladProcess process = decay_chain(2, {1.0, 1.0});
  Superoperator sparse = build_superoperator(process, Storage::Sparse);
  CHECK_THROWS_AS(spectrum(sparse, SpectrumMode::Full), std::invalid_argument);
}

TEST_CASE("dense storage past the limit is rejected") {
  LindbladProcess process = decay_chain(7, std::vector<double>(7, 1.0));  // dim 128
  CHECK_THROWS_AS(build_superoperator(process, Storage::Dense), std::invalid_argument);
}

TEST_CASE("spectra stay in the closed left half plane and pair under conjugation") {
  std::mt19937_64 rng(5);
  LindbladProcess process = decay_chain(2, {1.0, 0.3});
  process.set_hamiltonian(random_hermitian(4, rng));
  SpectrumReport report = spectrum(build_superoperator(process), SpectrumMode::Full);

  for (const auto& cluster : report.clusters) {
    CHECK(cluster.value.real() <= 1e-8 * report.scale);
    if (std::abs(cluster.value.imag()) > 1e-8 * report.scale) {
      bool paired = false;
      for (const auto& other : report.clusters) {
        if (std::abs(other.value - std::conj(cluster.value)) <= 1e-7 &&
            other.multiplicity == cluster.multiplicity) {
          paired = true;
        }
      }
      CHECK(paired);
    }
  }
}
