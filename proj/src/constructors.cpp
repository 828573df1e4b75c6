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

#include "lindprep/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lindprep {

GraphSpec::GraphSpec(int vertices, std::vector<std::pair<int, int>> edges) : vertices_(vertices) {
  if (vertices < 1) throw std::invalid_argument("GraphSpec: need at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("GraphSpec: self loop");
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= vertices) throw std::invalid_argument("GraphSpec: edge endpoint out of range");
    if (!seen.insert({a, b}).second) throw std::invalid_argument("GraphSpec: duplicate edge");
  }
  edges_.assign(seen.begin(), seen.end());
}

GraphSpec GraphSpec::path(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < vertices; ++i) edges.emplace_back(i, i + 1);
  return GraphSpec(vertices, std::move(edges));
}

GraphSpec GraphSpec::cycle(int vertices) {
  if (vertices < 3) throw std::invalid_argument("GraphSpec::cycle: need at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < vertices; ++i) edges.emplace_back(i, (i + 1) % vertices);
  return GraphSpec(vertices, std::move(edges));
}

GraphSpec GraphSpec::complete(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < vertices; ++a) {
    for (int b = a + 1; b < vertices; ++b) edges.emplace_back(a, b);
  }
  return GraphSpec(vertices, std::move(edges));
}

std::vector<int> GraphSpec::neighbors(int vertex) const {
  if (vertex < 0 || vertex >= vertices_) throw std::out_of_range("GraphSpec::neighbors: vertex out of range");
  std::vector<int> out;
  for (auto [a, b] : edges_) {
    if (a == vertex) out.push_back(b);
    if (b == vertex) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GraphSpec GraphSpec::read(std::istream& is) {
  std::string line;
  int vertices = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "n") {
      if (vertices >= 0) throw IoError("graph text: duplicate n line at line " + std::to_string(line_no));
      if (!(ls >> vertices) || vertices < 1) {
        throw IoError("graph text: malformed n line at line " + std::to_string(line_no));
      }
    } else if (tag == "edge") {
      int a, b;
      if (!(ls >> a >> b)) throw IoError("graph text: malformed edge line at line " + std::to_string(line_no));
      edges.emplace_back(a, b);
    } else {
      throw IoError("graph text: unknown tag '" + tag + "' at line " + std::to_string(line_no));
    }
  }
  if (vertices < 0) throw IoError("graph text: missing n line");
  try {
    return GraphSpec(vertices, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string("graph text: ") + e.what());
  }
}

GraphSpec GraphSpec::read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open for reading: " + path);
  return read(is);
}

void GraphSpec::write(std::ostream& os) const {
  os << "n " << vertices_ << "\n";
  for (auto [a, b] : edges_) os << "edge " << a << " " << b << "\n";
}

std::vector<QuasiLocalOperator> sigma_minus_jumps(int n) {
  CompositeSpace space = CompositeSpace::qubits(n);
  std::vector<QuasiLocalOperator> jumps;
  jumps.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    jumps.emplace_back(paulis::sigma_minus(), std::vector<int>{k}, space);
  }
  return jumps;
}

std::vector<Operator> conjugated_jumps(const Matrix& u, const std::vector<Operator>& base, double rel_tol) {
  if (!is_unitary(u, rel_tol)) throw std::invalid_argument("conjugated_jumps: matrix is not unitary");
  std::vector<Operator> out;
  out.reserve(base.size());
  for (const Operator& c : base) {
    if (c.matrix.rows() != u.rows()) throw std::invalid_argument("conjugated_jumps: dimension mismatch");
    out.emplace_back(Matrix(u * c.matrix * u.adjoint()), c.space);
  }
  return out;
}

std::vector<Operator> conjugated_jumps(const Matrix& u, const std::vector<QuasiLocalOperator>& base,
                                       double rel_tol) {
  std::vector<Operator> embedded;
  embedded.reserve(base.size());
  for (const QuasiLocalOperator& c : base) embedded.push_back(embed(c));
  return conjugated_jumps(u, embedded, rel_tol);
}

std::vector<QuasiLocalOperator> graph_state_jumps(const GraphSpec& graph) {
  const int n = graph.vertices();
  CompositeSpace space = CompositeSpace::qubits(n);
  std::vector<QuasiLocalOperator> jumps;
  jumps.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::vector<int> support = graph.neighbors(k);
    support.push_back(k);
    std::sort(support.begin(), support.end());
    CompositeSpace local_space = CompositeSpace::qubits(static_cast<int>(support.size()));
    auto position = [&](int site) {
      return static_cast<int>(std::lower_bound(support.begin(), support.end(), site) - support.begin());
    };

    // stabilizer of vertex k restricted to its support
    Matrix stab = embed_matrix(paulis::x(), {position(k)}, local_space);
    for (int b : graph.neighbors(k)) {
      stab = stab * embed_matrix(paulis::z(), {position(b)}, local_space);
    }
    Matrix z_k = embed_matrix(paulis::z(), {position(k)}, local_space);
    Matrix id = Matrix::Identity(local_space.dim(), local_space.dim());
    Matrix local = 0.5 * (id + stab) * z_k;
    jumps.emplace_back(std::move(local), std::move(support), space);
  }
  return jumps;
}

Vector graph_basis_state(const GraphSpec& graph, const std::vector<int>& labels) {
  const int n = graph.vertices();
  if (static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("graph_basis_state: label count mismatch");
  }
  for (int l : labels) {
    if (l != 0 && l != 1) throw std::invalid_argument("graph_basis_state: labels must be bits");
  }
  CompositeSpace space = CompositeSpace::qubits(n);
  const double amp = std::pow(2.0, -0.5 * n);
  Vector state(space.dim());
  std::vector<int> bits;
  for (int x = 0; x < space.dim(); ++x) {
    space.unpack(x, bits);
    int sign = 0;
    for (auto [a, b] : graph.edges()) sign += bits[static_cast<size_t>(a)] * bits[static_cast<size_t>(b)];
    for (int k = 0; k < n; ++k) sign += labels[static_cast<size_t>(k)] * bits[static_cast<size_t>(k)];
    state(x) = (sign % 2 == 0) ? amp : -amp;
  }
  return state;
}

Vector graph_state(const GraphSpec& graph) {
  return graph_basis_state(graph, std::vector<int>(static_cast<size_t>(graph.vertices()), 0));
}

Matrix graph_basis_unitary(const GraphSpec& graph) {
  const int n = graph.vertices();
  CompositeSpace space = CompositeSpace::qubits(n);
  Matrix u(space.dim(), space.dim());
  for (int lab = 0; lab < space.dim(); ++lab) {
    u.col(lab) = graph_basis_state(graph, space.unpack(lab));
  }
  return u;
}

std::vector<QuasiLocalOperator> qudit_ladder_jumps(int n, int d) {
  if (d < 2) throw std::invalid_argument("qudit_ladder_jumps: need local dimension at least 2");
  CompositeSpace space = CompositeSpace::qudits(n, d);
  Matrix ladder = Matrix::Zero(d, d);
  for (int j = 1; j < d; ++j) ladder(j - 1, j) = 1.0;
  std::vector<QuasiLocalOperator> jumps;
  jumps.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) jumps.emplace_back(ladder, std::vector<int>{k}, space);
  return jumps;
}

Operator global_ladder_jump(const std::vector<Vector>& basis, const CompositeSpace& space, double rel_tol) {
  if (basis.size() < 2) throw std::invalid_argument("global_ladder_jump: need at least two basis states");
  for (const Vector& v : basis) {
    if (v.size() != space.dim()) throw std::invalid_argument("global_ladder_jump: vector dimension mismatch");
  }
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i; j < basis.size(); ++j) {
      Complex inner = basis[i].adjoint() * basis[j];
      Complex expected = i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      if (std::abs(inner - expected) > rel_tol) {
        throw std::invalid_argument("global_ladder_jump: basis is not orthonormal");
      }
    }
  }
  Matrix c = Matrix::Zero(space.dim(), space.dim());
  for (size_t i = 0; i + 1 < basis.size(); ++i) {
    c += basis[i] * basis[i + 1].adjoint();
  }
  return Operator(std::move(c), space);
}

}  // namespace lindprep
