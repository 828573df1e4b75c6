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

#include "lindprep/composite_space.hpp"

#include <stdexcept>
#include <string>

namespace lindprep {

CompositeSpace::CompositeSpace(std::vector<int> local_dims) : dims_(std::move(local_dims)) {
  if (dims_.empty()) throw std::invalid_argument("CompositeSpace: no sites");
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("CompositeSpace: local dimension must be positive");
  }
  strides_.assign(dims_.size(), 1);
  for (int k = static_cast<int>(dims_.size()) - 2; k >= 0; --k) {
    strides_[k] = strides_[k + 1] * dims_[k + 1];
    if (strides_[k] > (1 << 28) / dims_[k]) {
      throw std::invalid_argument("CompositeSpace: dimension overflow");
    }
  }
  dim_ = strides_[0] * dims_[0];
}

CompositeSpace CompositeSpace::qubits(int n) { return qudits(n, 2); }

CompositeSpace CompositeSpace::qudits(int n, int d) {
  if (n < 1) throw std::invalid_argument("CompositeSpace: need at least one site");
  return CompositeSpace(std::vector<int>(static_cast<size_t>(n), d));
}

CompositeSpace CompositeSpace::single(int dim) { return CompositeSpace(std::vector<int>{dim}); }

int CompositeSpace::local_dim(int site) const {
  if (site < 0 || site >= sites()) throw std::out_of_range("CompositeSpace: site " + std::to_string(site));
  return dims_[static_cast<size_t>(site)];
}

int CompositeSpace::stride(int site) const {
  if (site < 0 || site >= sites()) throw std::out_of_range("CompositeSpace: site " + std::to_string(site));
  return strides_[static_cast<size_t>(site)];
}

int CompositeSpace::pack(const std::vector<int>& digits) const {
  if (static_cast<int>(digits.size()) != sites()) {
    throw std::invalid_argument("CompositeSpace::pack: digit count mismatch");
  }
  int index = 0;
  for (int k = 0; k < sites(); ++k) {
    int d = digits[static_cast<size_t>(k)];
    if (d < 0 || d >= dims_[static_cast<size_t>(k)]) {
      throw std::out_of_range("CompositeSpace::pack: digit out of range at site " + std::to_string(k));
    }
    index += d * strides_[static_cast<size_t>(k)];
  }
  return index;
}

void CompositeSpace::unpack(int index, std::vector<int>& digits) const {
  if (index < 0 || index >= dim_) throw std::out_of_range("CompositeSpace::unpack: index out of range");
  digits.resize(dims_.size());
  for (int k = 0; k < sites(); ++k) {
    digits[static_cast<size_t>(k)] = index / strides_[static_cast<size_t>(k)];
    index %= strides_[static_cast<size_t>(k)];
  }
}

std::vector<int> CompositeSpace::unpack(int index) const {
  std::vector<int> digits;
  unpack(index, digits);
  return digits;
}

}  // namespace lindprep
