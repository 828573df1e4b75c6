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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lindprep/superoperator.hpp"
#include "lindprep/types.hpp"

namespace lindprep {

struct EigenvalueCluster {
  Complex value;
  int multiplicity;
};

enum class SpectrumMode { Full, GapOnly };

struct SpectrumOptions {
  // Clustering radius and kernel threshold, absolute after dividing the
  // generator by its largest entry magnitude.
  double cluster_radius = 1e-8;
  double kernel_tol = 1e-8;
  // Relative singular value cut for the kernel rank decision.
  double rank_rel_tol = 1e-10;
  // Sparse path controls.
  int nev = 8;
  int max_subspace = 240;
  double arnoldi_tol = 1e-12;
  double shift_fraction = 0.01;  // shift = fraction * scale, real positive
  std::uint64_t seed = 0x5eed;
};

struct SpectrumReport {
  SpectrumMode mode = SpectrumMode::Full;
  // Descending real part, ties by ascending imaginary part. In gap-only mode
  // this holds only the eigenvalues the iteration converged, nearest 0.
  std::vector<EigenvalueCluster> clusters;
  int kernel_dim = 0;
  std::vector<Matrix> kernel_basis;  // Hilbert-Schmidt orthonormal
  std::optional<double> gap;
  std::vector<Complex> imaginary_violations;
  double scale = 0.0;
  std::vector<std::string> warnings;
};

/// Spectral analysis of the generator. Full mode requires dense storage and
/// total_dim <= kDenseDimLimit; gap-only runs shift-invert Arnoldi on the
/// sparse storage up to kSparseDimLimit.
SpectrumReport spectrum(const Superoperator& super, SpectrumMode mode, const SpectrumOptions& options = {});

struct NullspaceResult {
  std::vector<Matrix> basis;  // Hilbert-Schmidt orthonormal kernel elements
  std::vector<std::string> warnings;
  int dim() const { return static_cast<int>(basis.size()); }
};

/// Kernel of the generator. Dense storage uses an SVD rank cut at
/// rel_tol * sigma_max; singular values inside [1e-12, 1e-8] * sigma_max are
/// reported as rank-ambiguity warnings. Sparse storage uses shift-invert
/// Arnoldi near zero. When the kernel is one-dimensional the basis element is
/// rescaled to a density matrix (hermitian part, unit trace).
NullspaceResult stationary_space(const Superoperator& super, double rel_tol = 1e-10,
                                 const SpectrumOptions& options = {});

/// 1 / gap. Throws SolverError when the report carries no gap.
double relaxation_time(const SpectrumReport& report);

/// Group raw eigenvalues into clusters with the given absolute radius.
std::vector<EigenvalueCluster> cluster_eigenvalues(const std::vector<Complex>& values, double radius);

/// CSV rows "re,im,multiplicity" in the report ordering.
void write_spectrum_csv(std::ostream& os, const SpectrumReport& report);

}  // namespace lindprep
