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

#include "lindprep/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace lindprep {

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double max_abs(const SparseCMatrix& m) {
  double best = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    for (SparseCMatrix::InnerIterator it(m, k); it; ++it) {
      best = std::max(best, std::abs(it.value()));
    }
  }
  return best;
}

bool approx_equal(const Matrix& a, const Matrix& b, double rel_tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  double scale = std::max(max_abs(a), max_abs(b));
  if (scale == 0.0) return true;
  return max_abs(a - b) <= rel_tol * scale;
}

bool is_hermitian(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  double scale = max_abs(m);
  if (scale == 0.0) return true;
  return max_abs(m - m.adjoint()) <= rel_tol * scale;
}

bool is_unitary(const Matrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  Matrix gram = m.adjoint() * m;
  gram -= Matrix::Identity(m.rows(), m.cols());
  return max_abs(gram) <= rel_tol;
}

Complex hs_inner(const Matrix& a, const Matrix& b) { return (a.adjoint() * b).trace(); }

double frobenius(const Matrix& m) { return m.norm(); }

bool is_density_matrix(const Matrix& rho, double rel_tol) {
  if (rho.rows() != rho.cols()) return false;
  if (!is_hermitian(rho, rel_tol)) return false;
  double scale = std::max(max_abs(rho), 1.0 / static_cast<double>(rho.rows()));
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > rel_tol * scale * static_cast<double>(rho.rows())) {
    return false;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(((rho + rho.adjoint()) / 2.0).eval());
  if (es.info() != Eigen::Success) return false;
  return es.eigenvalues().minCoeff() >= -rel_tol * scale * static_cast<double>(rho.rows());
}

double state_fidelity(const Vector& psi, const Matrix& rho) {
  Complex value = psi.adjoint() * rho * psi;
  return value.real();
}

double overlap_fidelity(const Vector& a, const Vector& b) {
  Complex inner = a.adjoint() * b;
  return std::norm(inner);
}

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

}  // namespace lindprep
