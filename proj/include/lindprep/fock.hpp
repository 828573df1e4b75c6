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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lindprep/types.hpp"

namespace lindprep {

/// Number states of `particles` bosons on `sites` sites, enumerated with the
/// leftmost occupation as the major key, descending (|N 0 ...>, |N-1 1 ...>,
/// ...). The dimension is binomial(N + M - 1, M - 1).
class BoseFockBasis {
 public:
  BoseFockBasis(int sites, int particles);

  int sites() const { return sites_; }
  int particles() const { return particles_; }
  int dim() const { return static_cast<int>(states_.size()); }

  const std::vector<int>& occupation(int index) const;
  int index_of(const std::vector<int>& occupation) const;  // throws when absent

  /// One line per basis state, occupations space separated, basis order.
  std::string dump() const;

 private:
  int sites_;
  int particles_;
  std::vector<std::vector<int>> states_;
  std::map<std::vector<int>, int> index_;
};

/// Caches number-conserving sectors and the annihilation maps between them.
class BoseLadder {
 public:
  explicit BoseLadder(int sites) : sites_(sites) {}

  const BoseFockBasis& basis(int particles);

  /// a_site as a map from the N-particle sector to the (N-1)-particle sector.
  Matrix annihilator(int particles, int site);
  /// a_site^dagger from the N-particle sector to the (N+1)-particle sector.
  Matrix creator(int particles, int site);

 private:
  int sites_;
  std::map<int, BoseFockBasis> bases_;
};

enum class Spin { Up = 0, Down = 1 };

/// Two-species fermions on `sites` sites with fixed particle numbers per
/// spin. Modes are ordered site-major with spin up before spin down within a
/// site (mode = 2 * site + spin); a basis state is the ordered product of
/// creation operators over its occupied modes, ascending, on the vacuum.
class FermiFockBasis {
 public:
  FermiFockBasis(int sites, int n_up, int n_down);

  int sites() const { return sites_; }
  int n_up() const { return n_up_; }
  int n_down() const { return n_down_; }
  int dim() const { return static_cast<int>(states_.size()); }

  static int mode(Spin spin, int site) { return 2 * site + static_cast<int>(spin); }

  std::uint64_t mask(int index) const;
  int occupation(int index, Spin spin, int site) const;
  int index_of(std::uint64_t mask) const;  // throws when absent

  /// One line per basis state: spin-up occupations for sites 0..M-1 followed
  /// by spin-down occupations, space separated.
  std::string dump() const;

 private:
  int sites_;
  int n_up_;
  int n_down_;
  std::vector<std::uint64_t> states_;
  std::map<std::uint64_t, int> index_;
};

/// Caches fixed-(N_up, N_down) sectors and the elementary fermion maps, with
/// Jordan-Wigner signs from the mode ordering above.
class FermiLadder {
 public:
  explicit FermiLadder(int sites) : sites_(sites) {}

  int sites() const { return sites_; }
  const FermiFockBasis& basis(int n_up, int n_down);

  /// f_{spin,site} from sector (n_up, n_down) to the sector with one fewer
  /// particle of that spin.
  Matrix annihilator(int n_up, int n_down, Spin spin, int site);
  /// f^dagger_{spin,site} from (n_up, n_down) to one more of that spin.
  Matrix creator(int n_up, int n_down, Spin spin, int site);
  /// Diagonal occupation operator within the sector.
  Matrix number_op(int n_up, int n_down, Spin spin, int site);

 private:
  int sites_;
  std::map<std::pair<int, int>, FermiFockBasis> bases_;
};

}  // namespace lindprep
