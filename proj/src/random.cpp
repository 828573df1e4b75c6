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

#include "lindprep/random.hpp"

namespace lindprep {

Matrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      double re = gauss(rng);
      double im = gauss(rng);
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

Matrix random_hermitian(int dim, std::mt19937_64& rng) {
  Matrix a = random_matrix(dim, dim, rng);
  return (a + a.adjoint()) / 2.0;
}

Matrix random_density(int dim, std::mt19937_64& rng) {
  Matrix a = random_matrix(dim, dim, rng);
  Matrix rho = a * a.adjoint();
  rho /= rho.trace();
  return rho;
}

Matrix random_unitary(int dim, std::mt19937_64& rng) {
  Matrix a = random_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    double mag = std::abs(d);
    Complex phase = mag > 0 ? d / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

Vector random_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

}  // namespace lindprep
