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

#include <optional>
#include <vector>

#include "lindprep/composite_space.hpp"
#include "lindprep/operators.hpp"
#include "lindprep/types.hpp"

namespace lindprep {

struct Jump {
  Matrix op;
  double rate;
};

/// A Markovian master equation
///
///   rho' = -i [H, rho] + sum_l g_l (2 c_l rho c_l^dagger
///                                   - c_l^dagger c_l rho - rho c_l^dagger c_l)
///
/// with non-negative rates g_l and an optional hermitian Hamiltonian.
class LindbladProcess {
 public:
  explicit LindbladProcess(CompositeSpace space);

  void set_hamiltonian(Matrix h, double rel_tol = 1e-10);
  void clear_hamiltonian() { hamiltonian_.reset(); }

  void add_jump(Matrix op, double rate);
  void add_jump(const QuasiLocalOperator& op, double rate);

  const CompositeSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }

  bool has_hamiltonian() const { return hamiltonian_.has_value(); }
  const Matrix& hamiltonian() const;

  const std::vector<Jump>& jumps() const { return jumps_; }
  std::size_t jump_count() const { return jumps_.size(); }

  /// Largest jump rate, zero when there are no jumps.
  double max_rate() const;

  /// Jump operators without their rates.
  std::vector<Matrix> jump_operators() const;

 private:
  CompositeSpace space_;
  std::optional<Matrix> hamiltonian_;
  std::vector<Jump> jumps_;
};

}  // namespace lindprep
