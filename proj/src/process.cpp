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

#include "lindprep/process.hpp"

#include <algorithm>
#include <stdexcept>

namespace lindprep {

LindbladProcess::LindbladProcess(CompositeSpace space) : space_(std::move(space)) {
  if (space_.dim() < 1) throw std::invalid_argument("LindbladProcess: empty space");
}

void LindbladProcess::set_hamiltonian(Matrix h, double rel_tol) {
  if (h.rows() != space_.dim() || h.cols() != space_.dim()) {
    throw std::invalid_argument("set_hamiltonian: dimension mismatch");
  }
  if (!is_hermitian(h, rel_tol)) {
    throw std::invalid_argument("set_hamiltonian: matrix is not hermitian");
  }
  hamiltonian_ = std::move(h);
}

void LindbladProcess::add_jump(Matrix op, double rate) {
  if (op.rows() != space_.dim() || op.cols() != space_.dim()) {
    throw std::invalid_argument("add_jump: dimension mismatch");
  }
  if (rate < 0.0) throw std::invalid_argument("add_jump: negative rate");
  jumps_.push_back(Jump{std::move(op), rate});
}

void LindbladProcess::add_jump(const QuasiLocalOperator& op, double rate) {
  if (op.space != space_) throw std::invalid_argument("add_jump: operator lives on a different space");
  add_jump(embed(op).matrix, rate);
}

const Matrix& LindbladProcess::hamiltonian() const {
  if (!hamiltonian_) throw std::logic_error("hamiltonian(): none set");
  return *hamiltonian_;
}

double LindbladProcess::max_rate() const {
  double best = 0.0;
  for (const Jump& j : jumps_) best = std::max(best, j.rate);
  return best;
}

std::vector<Matrix> LindbladProcess::jump_operators() const {
  std::vector<Matrix> ops;
  ops.reserve(jumps_.size());
  for (const Jump& j : jumps_) ops.push_back(j.op);
  return ops;
}

}  // namespace lindprep
