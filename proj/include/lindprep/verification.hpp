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
#include <string>
#include <vector>

#include "lindprep/process.hpp"
#include "lindprep/spectrum.hpp"
#include "lindprep/superoperator.hpp"
#include "lindprep/types.hpp"

namespace lindprep {

/// Stationarity test for a pure state |phi>. With Q = sum_l g_l c_l^dagger c_l
/// - i H, the state is stationary iff Q^dagger |phi> = lambda |phi> and every
/// jump has |phi> as an eigenvector, c_l |phi> = lambda_l |phi>, with the
/// balance sum_l g_l |lambda_l|^2 = Re(lambda).
struct Theorem1Report {
  bool stationary = false;
  Complex lambda{0, 0};
  double q_residual = 0.0;
  std::vector<Complex> jump_eigenvalues;
  std::vector<double> jump_residuals;
  double balance_residual = 0.0;
  double scale = 0.0;  // normalization the verdict used
};

Theorem1Report check_theorem1(const LindbladProcess& process, const Vector& phi, double rel_tol = 1e-10);

/// Joint kernel of the jump operators, intersected (when a Hamiltonian is
/// present) with its eigenspaces. With several H eigenvalues represented the
/// dark states form a set, not a subspace; the groups record the split.
struct DarkSpaceResult {
  std::vector<Vector> vectors;
  bool is_subspace = true;
  std::vector<double> h_eigenvalues;       // one per group, empty without H
  std::vector<std::vector<int>> groups;    // indices into vectors
  std::vector<std::string> warnings;
  int dim() const { return static_cast<int>(vectors.size()); }
};

DarkSpaceResult dark_space(const LindbladProcess& process, double rel_tol = 1e-10);

enum class CertificateMethod { KernelDimension, KrylovReachability, InvariantSubspaceProbe };
enum class Verdict { Unique, NotUnique, Inconclusive };

std::string to_string(CertificateMethod method);
std::string to_string(Verdict verdict);

struct UniquenessCertificate {
  CertificateMethod method = CertificateMethod::KernelDimension;
  Verdict verdict = Verdict::Inconclusive;
  int space_dim = 0;
  int dimension_reached = -1;  // Krylov closure dimension
  int kernel_dim = -1;         // generator kernel dimension
  int degree_used = -1;        // monomial degree at termination
  int iterations_used = -1;    // probe shrink iterations executed
  double max_residual = 0.0;
  std::vector<Vector> witness;  // invariant-subspace basis for not-unique
  std::vector<std::string> notes;
};

/// Closure of span{|psi>} under the adjoint jumps. Reaching the full space
/// certifies that the dark state is the only stationary state; otherwise the
/// verdict is inconclusive. max_degree < 0 selects the default cap of
/// 4 * total_dim.
UniquenessCertificate krylov_reachability(const std::vector<Matrix>& jumps, const Vector& target,
                                          int max_degree = -1, double rank_tol = 1e-10);

/// Kernel dimension of the generator: 1 is unique, more is not.
UniquenessCertificate kernel_dimension_certificate(const Superoperator& super, double rel_tol = 1e-10,
                                                   const SpectrumOptions& options = {});

/// Refutation search: computes the largest subspace of the orthogonal
/// complement of the dark span that is invariant under every jump operator
/// and under K = sum_l g_l c_l^dagger c_l + i H, by iteratively removing
/// leaking directions. Such a subspace carries the whole restricted dynamics,
/// so a stationary state lives inside it and the verdict is not-unique with
/// the subspace as witness. An empty result only rules out stationary states
/// supported orthogonally to the dark span, hence inconclusive.
UniquenessCertificate invariant_subspace_probe(const LindbladProcess& process,
                                               const std::vector<Vector>& dark_vectors,
                                               double rel_tol = 1e-10);

/// Machine-parseable "key: value" lines.
std::string format_certificate(const UniquenessCertificate& cert);

}  // namespace lindprep
