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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace lindprep {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using SparseCMatrix = Eigen::SparseMatrix<Complex>;

/// Error raised when an iterative or direct solver fails to produce a
/// trustworthy answer (non-convergence, ambiguous rank, singular factor).
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Error raised when reading or writing files fails.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Largest entry magnitude; zero for empty matrices.
double max_abs(const Matrix& m);
double max_abs(const SparseCMatrix& m);

/// Entrywise comparison relative to the largest magnitude entry of the pair.
bool approx_equal(const Matrix& a, const Matrix& b, double rel_tol = 1e-10);

/// ||m - m^dagger|| relative to the scale of m.
bool is_hermitian(const Matrix& m, double rel_tol = 1e-10);

/// ||m^dagger m - 1|| below rel_tol.
bool is_unitary(const Matrix& m, double rel_tol = 1e-10);

/// Hilbert-Schmidt inner product tr(a^dagger b).
Complex hs_inner(const Matrix& a, const Matrix& b);

/// Frobenius norm.
double frobenius(const Matrix& m);

/// True when rho is hermitian, unit trace and positive semidefinite up to
/// rel_tol (eigenvalues allowed to dip to -rel_tol * scale).
bool is_density_matrix(const Matrix& rho, double rel_tol = 1e-10);

/// <psi| rho |psi> as a real number (the imaginary part must be noise).
double state_fidelity(const Vector& psi, const Matrix& rho);

/// |<a|b>|^2 for normalized vectors.
double overlap_fidelity(const Vector& a, const Vector& b);

/// printf-style %.17g rendering used by all text outputs.
std::string format_double(double v);

}  // namespace lindprep
