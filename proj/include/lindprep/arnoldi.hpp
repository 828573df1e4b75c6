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
#include <vector>

#include "lindprep/types.hpp"

namespace lindprep {

struct ArnoldiOptions {
  int nev = 6;               // eigenpairs wanted, nearest to the shift
  int max_subspace = 240;    // Krylov dimension cap
  int grow_step = 24;        // subspace growth between convergence checks
  double tol = 1e-12;        // relative Ritz residual threshold
  std::uint64_t seed = 0x5eed;
};

struct ArnoldiResult {
  std::vector<Complex> values;     // eigenvalues of A, nearest the shift first
  Matrix vectors;                  // matching unit-norm columns
  std::vector<double> residuals;   // true residuals ||A x - lambda x||
  bool converged = false;
  int subspace_dim = 0;
};

/// Shift-invert Arnoldi with full reorthogonalization: factorizes
/// (A - shift I) once with a sparse LU and iterates its inverse, returning
/// the nev eigenvalues of A closest to the shift. Throws SolverError when
/// the factorization fails or the subspace cap is hit before convergence
/// (the message carries the residuals).
ArnoldiResult shift_invert_eigs(const SparseCMatrix& a, Complex shift, const ArnoldiOptions& options = {});

}  // namespace lindprep
