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

#include "lindprep/operators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace lindprep {

namespace {

void check_sorted_distinct(const std::vector<int>& sites, const CompositeSpace& space) {
  if (sites.empty()) throw std::invalid_argument("operator support is empty");
  for (size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] < 0 || sites[i] >= space.sites()) {
      throw std::out_of_range("support site " + std::to_string(sites[i]) + " outside the space");
    }
    if (i > 0 && sites[i] <= sites[i - 1]) {
      throw std::invalid_argument("support sites must be strictly ascending");
    }
  }
}

int support_dim(const std::vector<int>& sites, const CompositeSpace& space) {
  int d = 1;
  for (int s : sites) d *= space.local_dim(s);
  return d;
}

}  // namespace

Operator::Operator(Matrix m, CompositeSpace s) : matrix(std::move(m)), space(std::move(s)) {
  if (matrix.rows() != matrix.cols() || matrix.rows() != space.dim()) {
    throw std::invalid_argument("Operator: matrix does not match space dimension");
  }
}

QuasiLocalOperator::QuasiLocalOperator(Matrix local_matrix, std::vector<int> support_sites,
                                       CompositeSpace full_space)
    : local(std::move(local_matrix)), sites(std::move(support_sites)), space(std::move(full_space)) {
  check_sorted_distinct(sites, space);
  int d = support_dim(sites, space);
  if (local.rows() != local.cols() || local.rows() != d) {
    throw std::invalid_argument("QuasiLocalOperator: local matrix does not match support dimension");
  }
}

QuasiLocalOperator QuasiLocalOperator::from_unsorted(Matrix local_matrix, std::vector<int> support_sites,
                                                     CompositeSpace full_space) {
  std::vector<int> order(support_sites.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return support_sites[static_cast<size_t>(a)] < support_sites[static_cast<size_t>(b)]; });

  std::vector<int> dims(support_sites.size());
  std::vector<int> sorted_sites(support_sites.size());
  for (size_t j = 0; j < order.size(); ++j) {
    sorted_sites[j] = support_sites[static_cast<size_t>(order[j])];
    dims[j] = full_space.local_dim(support_sites[j]);
  }
  Matrix permuted = permute_tensor_factors(local_matrix, dims, order);
  return QuasiLocalOperator(std::move(permuted), std::move(sorted_sites), std::move(full_space));
}

Matrix permute_tensor_factors(const Matrix& op, const std::vector<int>& dims, const std::vector<int>& perm) {
  if (dims.size() != perm.size()) throw std::invalid_argument("permute_tensor_factors: size mismatch");
  int total = 1;
  for (int d : dims) total *= d;
  if (op.rows() != total || op.cols() != total) {
    throw std::invalid_argument("permute_tensor_factors: matrix does not match dims");
  }
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= static_cast<int>(perm.size()) || seen[static_cast<size_t>(p)]) {
      throw std::invalid_argument("permute_tensor_factors: invalid permutation");
    }
    seen[static_cast<size_t>(p)] = true;
  }

  CompositeSpace in_space(dims);
  std::vector<int> out_dims(dims.size());
  for (size_t j = 0; j < perm.size(); ++j) out_dims[j] = dims[static_cast<size_t>(perm[j])];
  CompositeSpace out_space(out_dims);

  // index map: output basis index -> input basis index
  std::vector<int> map(static_cast<size_t>(total));
  std::vector<int> out_digits, in_digits(dims.size());
  for (int i = 0; i < total; ++i) {
    out_space.unpack(i, out_digits);
    for (size_t j = 0; j < perm.size(); ++j) {
      in_digits[static_cast<size_t>(perm[j])] = out_digits[j];
    }
    map[static_cast<size_t>(i)] = in_space.pack(in_digits);
  }

  Matrix result(total, total);
  for (int r = 0; r < total; ++r) {
    for (int c = 0; c < total; ++c) {
      result(r, c) = op(map[static_cast<size_t>(r)], map[static_cast<size_t>(c)]);
    }
  }
  return result;
}

Matrix embed_matrix(const Matrix& local, const std::vector<int>& sites, const CompositeSpace& space) {
  check_sorted_distinct(sites, space);
  int d_sup = support_dim(sites, space);
  if (local.rows() != local.cols() || local.rows() != d_sup) {
    throw std::invalid_argument("embed_matrix: local matrix does not match support dimension");
  }

  std::vector<int> rest;
  for (int k = 0; k < space.sites(); ++k) {
    if (!std::binary_search(sites.begin(), sites.end(), k)) rest.push_back(k);
  }

  std::vector<int> sup_dims, rest_dims;
  for (int s : sites) sup_dims.push_back(space.local_dim(s));
  for (int s : rest) rest_dims.push_back(space.local_dim(s));
  int d_rest = space.dim() / d_sup;

  CompositeSpace sup_space(sup_dims);
  CompositeSpace rest_space(rest.empty() ? std::vector<int>{1} : rest_dims);

  // full index = interleave(support digits, rest digits) per site order
  std::vector<int> digits(static_cast<size_t>(space.sites()));
  std::vector<int> sup_digits, rest_digits;
  std::vector<int> full_of(static_cast<size_t>(d_sup * d_rest));
  for (int a = 0; a < d_sup; ++a) {
    sup_space.unpack(a, sup_digits);
    for (int b = 0; b < d_rest; ++b) {
      if (!rest.empty()) rest_space.unpack(b, rest_digits);
      for (size_t j = 0; j < sites.size(); ++j) digits[static_cast<size_t>(sites[j])] = sup_digits[j];
      for (size_t j = 0; j < rest.size(); ++j) digits[static_cast<size_t>(rest[j])] = rest_digits[j];
      full_of[static_cast<size_t>(a) * static_cast<size_t>(d_rest) + static_cast<size_t>(b)] =
          space.pack(digits);
    }
  }

  Matrix result = Matrix::Zero(space.dim(), space.dim());
  for (int ar = 0; ar < d_sup; ++ar) {
    for (int ac = 0; ac < d_sup; ++ac) {
      Complex v = local(ar, ac);
      if (v == Complex(0.0, 0.0)) continue;
      for (int b = 0; b < d_rest; ++b) {
        int r = full_of[static_cast<size_t>(ar) * static_cast<size_t>(d_rest) + static_cast<size_t>(b)];
        int c = full_of[static_cast<size_t>(ac) * static_cast<size_t>(d_rest) + static_cast<size_t>(b)];
        result(r, c) = v;
      }
    }
  }
  return result;
}

Operator embed(const QuasiLocalOperator& op) {
  return Operator(embed_matrix(op.local, op.sites, op.space), op.space);
}

Operator kron(const Operator& a, const Operator& b) {
  std::vector<int> dims = a.space.local_dims();
  const std::vector<int>& bd = b.space.local_dims();
  dims.insert(dims.end(), bd.begin(), bd.end());
  Matrix m = Eigen::kroneckerProduct(a.matrix, b.matrix);
  return Operator(std::move(m), CompositeSpace(dims));
}

Matrix partial_trace(const Matrix& rho, const CompositeSpace& space, const std::vector<int>& keep) {
  if (rho.rows() != rho.cols() || rho.rows() != space.dim()) {
    throw std::invalid_argument("partial_trace: matrix does not match space");
  }
  check_sorted_distinct(keep, space);

  std::vector<int> rest;
  for (int k = 0; k < space.sites(); ++k) {
    if (!std::binary_search(keep.begin(), keep.end(), k)) rest.push_back(k);
  }
  if (rest.empty()) return rho;

  std::vector<int> keep_dims, rest_dims;
  for (int s : keep) keep_dims.push_back(space.local_dim(s));
  for (int s : rest) rest_dims.push_back(space.local_dim(s));
  CompositeSpace keep_space(keep_dims);
  CompositeSpace rest_space(rest_dims);
  int d_keep = keep_space.dim();
  int d_rest = rest_space.dim();

  std::vector<int> digits(static_cast<size_t>(space.sites()));
  std::vector<int> keep_digits, rest_digits;
  auto full_index = [&](int a, int b) {
    keep_space.unpack(a, keep_digits);
    rest_space.unpack(b, rest_digits);
    for (size_t j = 0; j < keep.size(); ++j) digits[static_cast<size_t>(keep[j])] = keep_digits[j];
    for (size_t j = 0; j < rest.size(); ++j) digits[static_cast<size_t>(rest[j])] = rest_digits[j];
    return space.pack(digits);
  };

  Matrix out = Matrix::Zero(d_keep, d_keep);
  for (int ar = 0; ar < d_keep; ++ar) {
    for (int ac = 0; ac < d_keep; ++ac) {
      Complex sum = 0.0;
      for (int b = 0; b < d_rest; ++b) sum += rho(full_index(ar, b), full_index(ac, b));
      out(ar, ac) = sum;
    }
  }
  return out;
}

std::vector<int> detect_support(const Matrix& op, const CompositeSpace& space, double rel_tol) {
  if (op.rows() != op.cols() || op.rows() != space.dim()) {
    throw std::invalid_argument("detect_support: matrix does not match space");
  }
  double scale = max_abs(op);
  if (scale == 0.0) return {};

  std::vector<int> support;
  for (int k = 0; k < space.sites(); ++k) {
    // Site k is outside the support iff op = id_k (x) tr_k(op) / d_k exactly.
    std::vector<int> others;
    for (int j = 0; j < space.sites(); ++j) {
      if (j != k) others.push_back(j);
    }
    bool trivial;
    if (others.empty()) {
      Matrix scaled = Matrix::Identity(op.rows(), op.cols()) * (op.trace() / static_cast<double>(op.rows()));
      trivial = max_abs(op - scaled) <= rel_tol * scale;
    } else {
      Matrix reduced = partial_trace(op, space, others) / static_cast<double>(space.local_dim(k));
      Matrix rebuilt = embed_matrix(reduced, others, space);
      trivial = max_abs(op - rebuilt) <= rel_tol * scale;
    }
    if (!trivial) support.push_back(k);
  }
  return support;
}

namespace paulis {

Matrix identity2() { return Matrix::Identity(2, 2); }

Matrix x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

Matrix z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

Matrix sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

}  // namespace paulis

namespace spin1 {

Matrix sx() {
  Matrix m(3, 3);
  double r = 1.0 / std::sqrt(2.0);
  m << 0, r, 0, r, 0, r, 0, r, 0;
  return m;
}

Matrix sy() {
  Matrix m = Matrix::Zero(3, 3);
  Complex ir(0, 1.0 / std::sqrt(2.0));
  m(0, 1) = -ir;
  m(1, 0) = ir;
  m(1, 2) = -ir;
  m(2, 1) = ir;
  return m;
}

Matrix sz() {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(2, 2) = -1.0;
  return m;
}

}  // namespace spin1

}  // namespace lindprep
