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

#include <vector>

#include "lindprep/composite_space.hpp"
#include "lindprep/types.hpp"

namespace lindprep {

/// A linear operator on a composite space.
struct Operator {
  Matrix matrix;
  CompositeSpace space;

  Operator() = default;
  Operator(Matrix m, CompositeSpace s);
};

/// An operator with known support: it acts as `local` on the listed sites
/// (ascending) and as identity elsewhere.
struct QuasiLocalOperator {
  Matrix local;
  std::vector<int> sites;
  CompositeSpace space;

  QuasiLocalOperator() = default;
  QuasiLocalOperator(Matrix local_matrix, std::vector<int> support_sites, CompositeSpace full_space);

  /// Accepts sites in any order; the local matrix is given with its tensor
  /// factors in the order of `support_sites` and is permuted onto ascending
  /// site order.
  static QuasiLocalOperator from_unsorted(Matrix local_matrix, std::vector<int> support_sites,
                                          CompositeSpace full_space);

  int local_dim() const { return static_cast<int>(local.rows()); }
};

/// Tensor the operator with identities on the complement of its support.
Operator embed(const QuasiLocalOperator& op);
Matrix embed_matrix(const Matrix& local, const std::vector<int>& sites, const CompositeSpace& space);

/// Kronecker product; the result lives on the concatenation of the spaces.
Operator kron(const Operator& a, const Operator& b);

/// Trace out every site not listed in `keep` (ascending, distinct).
Matrix partial_trace(const Matrix& rho, const CompositeSpace& space, const std::vector<int>& keep);

/// Sites on which the operator acts non-trivially (not as identity), detected
/// entrywise with tolerance relative to the operator scale.
std::vector<int> detect_support(const Matrix& op, const CompositeSpace& space, double rel_tol = 1e-10);

/// Reorder the tensor factors of a small operator: factor j of the output is
/// factor perm[j] of the input. dims lists the input factor dimensions.
Matrix permute_tensor_factors(const Matrix& op, const std::vector<int>& dims, const std::vector<int>& perm);

namespace paulis {
Matrix identity2();
Matrix x();
Matrix y();
Matrix z();
Matrix sigma_minus();  // |0><1|
Matrix sigma_plus();   // |1><0|
}  // namespace paulis

namespace spin1 {
Matrix sx();
Matrix sy();
Matrix sz();
}  // namespace spin1

}  // namespace lindprep
