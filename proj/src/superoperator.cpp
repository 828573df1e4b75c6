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

#include "lindprep/superoperator.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

namespace lindprep {

Superoperator::Superoperator(CompositeSpace space, Matrix dense)
    : space_(std::move(space)), dense_(std::move(dense)) {
  int n = space_.dim() * space_.dim();
  if (dense_.rows() != n || dense_.cols() != n) {
    throw std::invalid_argument("Superoperator: dense matrix must be D^2 x D^2");
  }
  scale_ = max_abs(dense_);
}

Superoperator::Superoperator(CompositeSpace space, SparseCMatrix sparse)
    : space_(std::move(space)), sparse_(std::move(sparse)) {
  int n = space_.dim() * space_.dim();
  if (sparse_.rows() != n || sparse_.cols() != n) {
    throw std::invalid_argument("Superoperator: sparse matrix must be D^2 x D^2");
  }
  scale_ = max_abs(sparse_);
}

const Matrix& Superoperator::dense() const {
  if (!has_dense()) throw std::logic_error("Superoperator: no dense storage");
  return dense_;
}

const SparseCMatrix& Superoperator::sparse() const {
  if (has_dense()) throw std::logic_error("Superoperator: dense storage, use to_sparse()");
  return sparse_;
}

SparseCMatrix Superoperator::to_sparse() const {
  if (!has_dense()) return sparse_;
  SparseCMatrix s(dense_.rows(), dense_.cols());
  std::vector<Eigen::Triplet<Complex>> trips;
  for (int c = 0; c < dense_.cols(); ++c) {
    for (int r = 0; r < dense_.rows(); ++r) {
      if (dense_(r, c) != Complex(0.0, 0.0)) trips.emplace_back(r, c, dense_(r, c));
    }
  }
  s.setFromTriplets(trips.begin(), trips.end());
  return s;
}

Vector Superoperator::apply(const Vector& v) const {
  if (v.size() != super_dim()) throw std::invalid_argument("Superoperator::apply: size mismatch");
  if (has_dense()) return dense_ * v;
  return sparse_ * v;
}

namespace {

Matrix dense_generator_matrix(const LindbladProcess& process) {
  int d = process.dim();
  int n = d * d;
  Matrix m = Matrix::Zero(n, n);
  Matrix id = Matrix::Identity(d, d);
  if (process.has_hamiltonian()) {
    const Matrix& h = process.hamiltonian();
    m -= Complex(0, 1) * (Eigen::kroneckerProduct(id, h) - Eigen::kroneckerProduct(h.transpose(), id));
  }
  for (const Jump& j : process.jumps()) {
    const Matrix& c = j.op;
    Matrix cd_c = c.adjoint() * c;
    m += j.rate * (2.0 * Eigen::kroneckerProduct(c.conjugate(), c).eval() -
                   Eigen::kroneckerProduct(id, cd_c).eval() -
                   Eigen::kroneckerProduct(cd_c.transpose(), id).eval());
  }
  return m;
}

SparseCMatrix sparse_kron(const SparseCMatrix& a, const SparseCMatrix& b) {
  SparseCMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(static_cast<size_t>(a.nonZeros()) * static_cast<size_t>(b.nonZeros()));
  for (int ka = 0; ka < a.outerSize(); ++ka) {
    for (SparseCMatrix::InnerIterator ia(a, ka); ia; ++ia) {
      for (int kb = 0; kb < b.outerSize(); ++kb) {
        for (SparseCMatrix::InnerIterator ib(b, kb); ib; ++ib) {
          trips.emplace_back(static_cast<int>(ia.row() * b.rows() + ib.row()),
                             static_cast<int>(ia.col() * b.cols() + ib.col()),
                             ia.value() * ib.value());
        }
      }
    }
  }
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

SparseCMatrix sparse_generator_matrix(const LindbladProcess& process) {
  int d = process.dim();
  int n = d * d;
  SparseCMatrix id(d, d);
  id.setIdentity();
  SparseCMatrix m(n, n);
  if (process.has_hamiltonian()) {
    SparseCMatrix h = process.hamiltonian().sparseView();
    SparseCMatrix ht = SparseCMatrix(h.transpose());
    m = m + SparseCMatrix(Complex(0, -1) * (sparse_kron(id, h) - sparse_kron(ht, id)));
  }
  for (const Jump& j : process.jumps()) {
    SparseCMatrix c = j.op.sparseView();
    SparseCMatrix cconj = c.conjugate();
    SparseCMatrix cd_c = SparseCMatrix(c.adjoint()) * c;
    SparseCMatrix cd_c_t = SparseCMatrix(cd_c.transpose());
    m = m + SparseCMatrix(j.rate * (2.0 * sparse_kron(cconj, c) - sparse_kron(id, cd_c) -
                                    sparse_kron(cd_c_t, id)));
  }
  m.makeCompressed();
  return m;
}

}  // namespace

Superoperator build_superoperator(const LindbladProcess& process, Storage storage) {
  int d = process.dim();
  if (storage == Storage::Auto) {
    storage = d <= kDenseDimLimit ? Storage::Dense : Storage::Sparse;
  }
  if (storage == Storage::Dense) {
    if (d > kDenseDimLimit) {
      throw std::invalid_argument("build_superoperator: dense storage limited to dimension " +
                                  std::to_string(kDenseDimLimit) + ", got " + std::to_string(d));
    }
    return Superoperator(process.space(), dense_generator_matrix(process));
  }
  return Superoperator(process.space(), sparse_generator_matrix(process));
}

Matrix apply_generator(const LindbladProcess& process, const Matrix& sigma) {
  int d = process.dim();
  if (sigma.rows() != d || sigma.cols() != d) {
    throw std::invalid_argument("apply_generator: dimension mismatch");
  }
  Matrix out = Matrix::Zero(d, d);
  if (process.has_hamiltonian()) {
    const Matrix& h = process.hamiltonian();
    out -= Complex(0, 1) * (h * sigma - sigma * h);
  }
  for (const Jump& j : process.jumps()) {
    const Matrix& c = j.op;
    Matrix c_sigma = c * sigma;
    Matrix cd_c = c.adjoint() * c;
    out += j.rate * (2.0 * c_sigma * c.adjoint() - cd_c * sigma - sigma * cd_c);
  }
  return out;
}

Vector vec(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("vec: matrix must be square");
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, int dim) {
  if (v.size() != static_cast<long>(dim) * dim) throw std::invalid_argument("unvec: size mismatch");
  return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

}  // namespace lindprep
