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

#include "lindprep/arnoldi.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/SparseLU>

namespace lindprep {

namespace {

struct RitzPair {
  Complex theta;  // eigenvalue of the inverted operator
  Vector y;       // Ritz vector in the Krylov basis
  double estimate;  // h(m, m-1) * |last component of y|
};

// Ritz pairs of the leading m x m block, sorted by |theta| descending
// (nearest the shift first after inversion).
std::vector<RitzPair> ritz_pairs(const Matrix& h, int m, double beta) {
  Eigen::ComplexEigenSolver<Matrix> es(h.topLeftCorner(m, m));
  if (es.info() != Eigen::Success) throw SolverError("Arnoldi: Hessenberg eigensolver failed");
  std::vector<RitzPair> pairs(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    pairs[static_cast<size_t>(i)].theta = es.eigenvalues()(i);
    pairs[static_cast<size_t>(i)].y = es.eigenvectors().col(i);
    pairs[static_cast<size_t>(i)].estimate = beta * std::abs(es.eigenvectors()(m - 1, i));
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const RitzPair& a, const RitzPair& b) { return std::abs(a.theta) > std::abs(b.theta); });
  return pairs;
}

}  // namespace

ArnoldiResult shift_invert_eigs(const SparseCMatrix& a, Complex shift, const ArnoldiOptions& options) {
  const int n = static_cast<int>(a.rows());
  if (a.rows() != a.cols()) throw std::invalid_argument("shift_invert_eigs: matrix must be square");
  if (options.nev < 1) throw std::invalid_argument("shift_invert_eigs: nev must be positive");
  if (options.nev > n) throw std::invalid_argument("shift_invert_eigs: nev exceeds the dimension");
  const int max_m = std::min(std::max(options.max_subspace, options.nev + 2), n);

  SparseCMatrix id(n, n);
  id.setIdentity();
  SparseCMatrix b = a - shift * id;
  b.makeCompressed();
  Eigen::SparseLU<SparseCMatrix> lu;
  lu.compute(b);
  if (lu.info() != Eigen::Success) {
    throw SolverError("shift_invert_eigs: LU factorization of (A - shift) failed; the shift may hit an eigenvalue");
  }

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector start(n);
  for (int i = 0; i < n; ++i) start(i) = Complex(gauss(rng), gauss(rng));
  start.normalize();

  Matrix v(n, max_m + 1);
  v.col(0) = start;
  Matrix h = Matrix::Zero(max_m + 1, max_m);

  const int grow = std::max(1, options.grow_step);
  int m = 0;
  bool breakdown = false;
  std::vector<RitzPair> pairs;

  while (m < max_m && !breakdown) {
    int target = std::min(max_m, m + grow);
    for (; m < target; ++m) {
      Vector w = lu.solve(v.col(m));
      if (lu.info() != Eigen::Success) throw SolverError("shift_invert_eigs: sparse solve failed");
      // modified Gram-Schmidt, two passes, corrections folded into h
      for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j <= m; ++j) {
          Complex hj = v.col(j).dot(w);
          h(j, m) += hj;
          w -= hj * v.col(j);
        }
      }
      double norm_w = w.norm();
      h(m + 1, m) = norm_w;
      if (norm_w <= 1e-14) {  // exact invariant subspace reached
        breakdown = true;
        ++m;
        break;
      }
      v.col(m + 1) = w / norm_w;
    }

    double beta = breakdown ? 0.0 : std::abs(h(m, m - 1));
    pairs = ritz_pairs(h, m, beta);

    if (breakdown) break;
    if (m >= options.nev) {
      bool all_ok = true;
      for (int i = 0; i < options.nev; ++i) {
        const RitzPair& p = pairs[static_cast<size_t>(i)];
        double scale = std::abs(p.theta);
        if (scale == 0.0 || p.estimate > options.tol * scale) {
          all_ok = false;
          break;
        }
      }
      if (all_ok) break;
    }
    if (m >= max_m) {
      std::ostringstream msg;
      msg << "shift_invert_eigs: no convergence with subspace " << m << "; residual estimates:";
      for (int i = 0; i < std::min(options.nev, m); ++i) {
        msg << " " << pairs[static_cast<size_t>(i)].estimate;
      }
      throw SolverError(msg.str());
    }
  }

  const int found = std::min(options.nev, m);
  ArnoldiResult result;
  result.converged = true;
  result.subspace_dim = m;
  result.values.resize(static_cast<size_t>(found));
  result.residuals.resize(static_cast<size_t>(found));
  result.vectors.resize(n, found);
  for (int i = 0; i < found; ++i) {
    const RitzPair& p = pairs[static_cast<size_t>(i)];
    if (std::abs(p.theta) == 0.0) {
      throw SolverError("shift_invert_eigs: zero Ritz value of the inverted operator");
    }
    Complex lambda = shift + 1.0 / p.theta;
    Vector x = v.leftCols(m) * p.y;
    x.normalize();
    result.values[static_cast<size_t>(i)] = lambda;
    result.vectors.col(i) = x;
    result.residuals[static_cast<size_t>(i)] = (a * x - lambda * x).norm();
  }
  return result;
}

}  // namespace lindprep
