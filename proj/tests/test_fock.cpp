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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "lindprep/fock.hpp"
#include "lindprep/types.hpp"
#include "oracles.hpp"

using namespace lindprep;

namespace {

// Embed a fixed-number sector into the full 2^(2M) fermion space and express
// a full-space operator as a matrix between two sectors.
Matrix project_to_sectors(const oracle::FullFermiSpace& full, const Matrix& op,
                          const FermiFockBasis& to, const FermiFockBasis& from) {
  Matrix out(to.dim(), from.dim());
  for (int j = 0; j < from.dim(); ++j) {
    Vector moved = op * full.basis_state(from.mask(j));
    for (int i = 0; i < to.dim(); ++i) {
      out(i, j) = full.basis_state(to.mask(i)).dot(moved);
    }
  }
  return out;
}

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long v = 1;
  for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
  return static_cast<int>(v);
}

}  // namespace

TEST_CASE("bose basis enumerates number states leftmost-major descending") {
  BoseFockBasis basis(3, 2);
  CHECK(basis.dim() == 6);  // binomial(2 + 2, 2)
  CHECK(basis.occupation(0) == std::vector<int>{2, 0, 0});
  CHECK(basis.occupation(1) == std::vector<int>{1, 1, 0});
  CHECK(basis.occupation(2) == std::vector<int>{1, 0, 1});
  CHECK(basis.occupation(3) == std::vector<int>{0, 2, 0});
  CHECK(basis.occupation(5) == std::vector<int>{0, 0, 2});
  for (int i = 0; i < basis.dim(); ++i) {
    CHECK(basis.index_of(basis.occupation(i)) == i);
    int total = 0;
    for (int n : basis.occupation(i)) total += n;
    CHECK(total == 2);
  }
  CHECK_THROWS_AS(basis.index_of({2, 1, 0}), std::out_of_range);
  CHECK(BoseFockBasis(4, 3).dim() == binomial(3 + 3, 3));

  std::string dump = basis.dump();
  CHECK(dump.rfind("2 0 0\n", 0) == 0);
}

TEST_CASE("bose annihilator carries the square-root matrix elements") {
  BoseLadder ladder(3);
  const BoseFockBasis& two = ladder.basis(2);
  const BoseFockBasis& one = ladder.basis(1);
  Matrix a0 = ladder.annihilator(2, 0);
  REQUIRE(a0.rows() == one.dim());
  REQUIRE(a0.cols() == two.dim());
  // a_0 |2,0,0> = sqrt(2) |1,0,0>,  a_0 |1,1,0> = |0,1,0>
  CHECK(std::abs(a0(one.index_of({1, 0, 0}), two.index_of({2, 0, 0})) - std::sqrt(2.0)) <= 1e-14);
  CHECK(std::abs(a0(one.index_of({0, 1, 0}), two.index_of({1, 1, 0})) - Complex(1, 0)) <= 1e-14);
  CHECK(std::abs(a0(one.index_of({0, 0, 1}), two.index_of({0, 2, 0}))) <= 1e-14);

  // creator is the adjoint map between the same sectors
  CHECK(max_abs(Matrix(ladder.creator(1, 0) - a0.adjoint())) <= 1e-14);
}

TEST_CASE("bose ladder satisfies the canonical commutation on each sector") {
  const int sites = 3;
  BoseLadder ladder(sites);
  for (int n : {1, 2, 3}) {
    const int dim = ladder.basis(n).dim();
    for (int p = 0; p < sites; ++p) {
      for (int q = 0; q < sites; ++q) {
        Matrix a_adag = ladder.annihilator(n + 1, p) * ladder.creator(n, q);
        Matrix adag_a = ladder.creator(n - 1, q) * ladder.annihilator(n, p);
        Matrix comm = a_adag - adag_a;
        Matrix expected = p == q ? Matrix(Matrix::Identity(dim, dim)) : Matrix(Matrix::Zero(dim, dim));
        CHECK(max_abs(Matrix(comm - expected)) <= 1e-13);
      }
    }
  }
  // on the vacuum a a^dagger alone is already the identity
  Matrix on_vacuum = ladder.annihilator(1, 1) * ladder.creator(0, 1);
  CHECK(max_abs(Matrix(on_vacuum - Matrix::Identity(1, 1))) <= 1e-14);
}

TEST_CASE("bose number operators sum to the particle number") {
  BoseLadder ladder(4);
  const int n = 3;
  const BoseFockBasis& basis = ladder.basis(n);
  Matrix total = Matrix::Zero(basis.dim(), basis.dim());
  for (int p = 0; p < 4; ++p) {
    Matrix num = ladder.creator(n - 1, p) * ladder.annihilator(n, p);
    // diagonal equals the occupation
    for (int i = 0; i < basis.dim(); ++i) {
      CHECK(std::abs(num(i, i) - Complex(basis.occupation(i)[p], 0)) <= 1e-13);
    }
    total += num;
  }
  CHECK(max_abs(Matrix(total - double(n) * Matrix::Identity(basis.dim(), basis.dim()))) <= 1e-12);
}

TEST_CASE("fermi basis fixes both spin populations") {
  FermiFockBasis basis(2, 1, 1);
  CHECK(basis.dim() == 4);
  CHECK(FermiFockBasis::mode(Spin::Up, 0) == 0);
  CHECK(FermiFockBasis::mode(Spin::Down, 0) == 1);
  CHECK(FermiFockBasis::mode(Spin::Up, 1) == 2);
  for (int i = 0; i < basis.dim(); ++i) {
    std::uint64_t mask = basis.mask(i);
    CHECK(basis.index_of(mask) == i);
    int up = 0, down = 0;
    for (int site = 0; site < 2; ++site) {
      up += basis.occupation(i, Spin::Up, site);
      down += basis.occupation(i, Spin::Down, site);
      CHECK(basis.occupation(i, Spin::Up, site) ==
            static_cast<int>((mask >> FermiFockBasis::mode(Spin::Up, site)) & 1));
    }
    CHECK(up == 1);
    CHECK(down == 1);
  }
  CHECK_THROWS_AS(basis.index_of(0), std::out_of_range);
  CHECK(FermiFockBasis(3, 2, 1).dim() == binomial(3, 2) * binomial(3, 1));
}

TEST_CASE("full-space fermion oracle satisfies the anticommutation relations") {
  oracle::FullFermiSpace full(2);
  const int dim = 1 << full.n_modes;
  for (int p = 0; p < full.n_modes; ++p) {
    for (int q = 0; q < full.n_modes; ++q) {
      Matrix anti = full.annihilate[p] * full.create(q) + full.create(q) * full.annihilate[p];
      Matrix expected = p == q ? Matrix(Matrix::Identity(dim, dim)) : Matrix(Matrix::Zero(dim, dim));
      CHECK(max_abs(Matrix(anti - expected)) <= 1e-14);
      Matrix anti2 = full.annihilate[p] * full.annihilate[q] + full.annihilate[q] * full.annihilate[p];
      CHECK(max_abs(anti2) <= 1e-14);
    }
  }
}

TEST_CASE("sector annihilators match the full-space construction") {
  const int sites = 2;
  FermiLadder ladder(sites);
  oracle::FullFermiSpace full(sites);
  for (int n_up : {1, 2}) {
    for (int n_down : {0, 1}) {
      for (int site = 0; site < sites; ++site) {
        // spin up removal
        if (n_up > 0) {
          Matrix lib = ladder.annihilator(n_up, n_down, Spin::Up, site);
          Matrix ref = project_to_sectors(full, full.annihilate[FermiFockBasis::mode(Spin::Up, site)],
                                          ladder.basis(n_up - 1, n_down), ladder.basis(n_up, n_down));
          CHECK(max_abs(Matrix(lib - ref)) <= 1e-13);
        }
        // spin down removal
        if (n_down > 0) {
          Matrix lib = ladder.annihilator(n_up, n_down, Spin::Down, site);
          Matrix ref = project_to_sectors(full, full.annihilate[FermiFockBasis::mode(Spin::Down, site)],
                                          ladder.basis(n_up, n_down - 1), ladder.basis(n_up, n_down));
          CHECK(max_abs(Matrix(lib - ref)) <= 1e-13);
        }
      }
    }
  }
}

TEST_CASE("fermi creator is the adjoint of the annihilator") {
  FermiLadder ladder(3);
  Matrix up = ladder.annihilator(2, 1, Spin::Up, 1);
  CHECK(max_abs(Matrix(ladder.creator(1, 1, Spin::Up, 1) - up.adjoint())) <= 1e-14);
}

TEST_CASE("fermi number operator reads off the occupations") {
  FermiLadder ladder(3);
  const FermiFockBasis& basis = ladder.basis(2, 1);
  for (int site = 0; site < 3; ++site) {
    for (Spin spin : {Spin::Up, Spin::Down}) {
      Matrix num = ladder.number_op(2, 1, spin, site);
      for (int i = 0; i < basis.dim(); ++i) {
        CHECK(std::abs(num(i, i) - Complex(basis.occupation(i, spin, site), 0)) <= 1e-14);
        for (int j = 0; j < basis.dim(); ++j) {
          if (i != j) CHECK(std::abs(num(i, j)) <= 1e-14);
        }
      }
    }
  }
}

TEST_CASE("distinct modes on one site anticommute through the sector maps") {
  // f_up f_down^dagger on the same site must anticommute; the sector maps
  // composed in either order differ by the Jordan-Wigner sign.
  FermiLadder ladder(2);
  Matrix route_a = ladder.creator(0, 0, Spin::Down, 0) * ladder.annihilator(1, 0, Spin::Up, 0);
  Matrix route_b = ladder.annihilator(1, 1, Spin::Up, 0) * ladder.creator(1, 0, Spin::Down, 0);
  CHECK(max_abs(Matrix(route_a + route_b)) <= 1e-14);
}
