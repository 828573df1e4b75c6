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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lindprep/composite_space.hpp"
#include "lindprep/operators.hpp"
#include "lindprep/types.hpp"

namespace lindprep {

/// Simple undirected graph on vertices 0..n-1 with no self loops.
class GraphSpec {
 public:
  GraphSpec() = default;
  GraphSpec(int vertices, std::vector<std::pair<int, int>> edges);

  static GraphSpec path(int vertices);
  static GraphSpec cycle(int vertices);
  static GraphSpec complete(int vertices);

  int vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }  // normalized a < b
  std::vector<int> neighbors(int vertex) const;

  // Text format:  "n <vertices>"  then one "edge <a> <b>" line per edge.
  static GraphSpec read(std::istream& is);
  static GraphSpec read_file(const std::string& path);
  void write(std::ostream& os) const;

 private:
  int vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// One lowering operator |0><1| per site.
std::vector<QuasiLocalOperator> sigma_minus_jumps(int n);

/// u c u^dagger for each base jump; u must be unitary on the same space.
std::vector<Operator> conjugated_jumps(const Matrix& u, const std::vector<Operator>& base, double rel_tol = 1e-10);
std::vector<Operator> conjugated_jumps(const Matrix& u, const std::vector<QuasiLocalOperator>& base,
                                       double rel_tol = 1e-10);

/// Stabilizer-based jumps c_k = (1 + X_k prod_{b in N(k)} Z_b) Z_k / 2,
/// supported on vertex k and its neighborhood.
std::vector<QuasiLocalOperator> graph_state_jumps(const GraphSpec& graph);

/// Graph basis state labeled by bits: Z_1^{i_1} ... Z_n^{i_n} applied to the
/// graph state, whose amplitude on |0..0> is fixed real positive.
Vector graph_basis_state(const GraphSpec& graph, const std::vector<int>& labels);

/// The graph state itself (all labels zero).
Vector graph_state(const GraphSpec& graph);

/// Unitary mapping the computational basis to the graph basis, column lab
/// (big-endian bits) holding the graph basis state with those labels.
Matrix graph_basis_unitary(const GraphSpec& graph);

/// Qudit lowering ladder J_d = sum_j |j-1><j| on each of n sites.
std::vector<QuasiLocalOperator> qudit_ladder_jumps(int n, int d);

/// Single global ladder C = sum_i |phi_i><phi_{i+1}| walking an orthonormal
/// basis down to its first element.
Operator global_ladder_jump(const std::vector<Vector>& basis, const CompositeSpace& space,
                            double rel_tol = 1e-10);

}  // namespace lindprep
