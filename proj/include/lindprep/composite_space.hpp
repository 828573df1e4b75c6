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

namespace lindprep {

/// Tensor-product Hilbert space of a finite chain of sites.
///
/// Site 0 is the most significant tensor factor: a basis index decomposes as
/// index = d_0 * stride_0 + d_1 * stride_1 + ... with stride_k the product of
/// the local dimensions to the right of site k.
class CompositeSpace {
 public:
  CompositeSpace() = default;

  explicit CompositeSpace(std::vector<int> local_dims);

  static CompositeSpace qubits(int n);
  static CompositeSpace qudits(int n, int d);
  /// A space treated as a single site (used for Fock sectors that are not
  /// tensor products of per-site spaces).
  static CompositeSpace single(int dim);

  int sites() const { return static_cast<int>(dims_.size()); }
  int local_dim(int site) const;
  const std::vector<int>& local_dims() const { return dims_; }
  int dim() const { return dim_; }
  int stride(int site) const;

  int pack(const std::vector<int>& digits) const;
  void unpack(int index, std::vector<int>& digits) const;
  std::vector<int> unpack(int index) const;

  bool operator==(const CompositeSpace& other) const { return dims_ == other.dims_; }
  bool operator!=(const CompositeSpace& other) const { return !(*this == other); }

 private:
  std::vector<int> dims_;
  std::vector<int> strides_;
  int dim_ = 0;
};

}  // namespace lindprep
