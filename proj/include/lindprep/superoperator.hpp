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

#include "lindprep/process.hpp"
#include "lindprep/types.hpp"

namespace lindprep {

/// Largest total dimension for which the dense superoperator is built by
/// default and dense algorithms (full spectra, SVD kernels, expm) apply.
inline constexpr int kDenseDimLimit = 64;

/// Largest total dimension the sparse spectral path accepts.
inline constexpr int kSparseDimLimit = 256;

enum class Storage { Auto, Dense, Sparse };

/// The generator as a D^2 x D^2 matrix acting on column-stacked density
/// matrices: vec(A rho B) = (B^T kron A) vec(rho).
class Superoperator {
 public:
  Superoperator(CompositeSpace space, Matrix dense);
  Superoperator(CompositeSpace space, SparseCMatrix sparse);

  const CompositeSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }
  int super_dim() const { return space_.dim() * space_.dim(); }

  bool has_dense() const { return dense_.size() > 0; }
  bool has_sparse() const { return sparse_.nonZeros() > 0 || sparse_.rows() > 0; }
  const Matrix& dense() const;
  const SparseCMatrix& sparse() const;

  /// Sparse view of the generator, built from the dense storage on demand.
  SparseCMatrix to_sparse() const;

  /// Largest entry magnitude, the normalization used by spectral tolerances.
  double scale() const { return scale_; }

  Vector apply(const Vector& v) const;

 private:
  CompositeSpace space_;
  Matrix dense_;
  SparseCMatrix sparse_;
  double scale_ = 0.0;
};

/// Assemble the superoperator. Auto selects dense storage up to
/// kDenseDimLimit and sparse beyond; Dense past the limit is an error.
Superoperator build_superoperator(const LindbladProcess& process, Storage storage = Storage::Auto);

/// The generator applied directly to a matrix, without assembling the
/// superoperator.
Matrix apply_generator(const LindbladProcess& process, const Matrix& sigma);

/// Column-major stacking of a square matrix and its inverse.
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, int dim);

}  // namespace lindprep
