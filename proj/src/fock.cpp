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

#include "lindprep/fock.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lindprep {

namespace {

void enumerate_occupations(int sites_left, int n_left, std::vector<int>& prefix,
                           std::vector<std::vector<int>>& states) {
  if (sites_left == 1) {
    prefix.push_back(n_left);
    states.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int k = n_left; k >= 0; --k) {
    prefix.push_back(k);
    enumerate_occupations(sites_left - 1, n_left - k, prefix, states);
    prefix.pop_back();
  }
}

}  // namespace

BoseFockBasis::BoseFockBasis(int sites, int particles) : sites_(sites), particles_(particles) {
  if (sites < 1) throw std::invalid_argument("BoseFockBasis: need at least one site");
  if (particles < 0) throw std::invalid_argument("BoseFockBasis: negative particle number");
  std::vector<int> prefix;
  enumerate_occupations(sites, particles, prefix, states_);
  if (states_.size() > (1u << 22)) throw std::invalid_argument("BoseFockBasis: sector too large");
  for (size_t i = 0; i < states_.size(); ++i) index_[states_[i]] = static_cast<int>(i);
}

const std::vector<int>& BoseFockBasis::occupation(int index) const {
  if (index < 0 || index >= dim()) throw std::out_of_range("BoseFockBasis: index out of range");
  return states_[static_cast<size_t>(index)];
}

int BoseFockBasis::index_of(const std::vector<int>& occupation) const {
  auto it = index_.find(occupation);
  if (it == index_.end()) throw std::out_of_range("BoseFockBasis: occupation not in this sector");
  return it->second;
}

std::string BoseFockBasis::dump() const {
  std::ostringstream os;
  for (const std::vector<int>& state : states_) {
    for (size_t k = 0; k < state.size(); ++k) {
      if (k > 0) os << " ";
      os << state[k];
    }
    os << "\n";
  }
  return os.str();
}

const BoseFockBasis& BoseLadder::basis(int particles) {
  auto it = bases_.find(particles);
  if (it == bases_.end()) {
    it = bases_.emplace(particles, BoseFockBasis(sites_, particles)).first;
  }
  return it->second;
}

Matrix BoseLadder::annihilator(int particles, int site) {
  if (particles < 1) throw std::invalid_argument("BoseLadder::annihilator: empty sector below");
  if (site < 0 || site >= sites_) throw std::out_of_range("BoseLadder::annihilator: site out of range");
  const BoseFockBasis& from = basis(particles);
  const BoseFockBasis& to = basis(particles - 1);
  Matrix a = Matrix::Zero(to.dim(), from.dim());
  std::vector<int> target;
  for (int col = 0; col < from.dim(); ++col) {
    const std::vector<int>& occ = from.occupation(col);
    int n = occ[static_cast<size_t>(site)];
    if (n == 0) continue;
    target = occ;
    target[static_cast<size_t>(site)] -= 1;
    a(to.index_of(target), col) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

Matrix BoseLadder::creator(int particles, int site) {
  if (particles < 0) throw std::invalid_argument("BoseLadder::creator: negative sector");
  if (site < 0 || site >= sites_) throw std::out_of_range("BoseLadder::creator: site out of range");
  const BoseFockBasis& from = basis(particles);
  const BoseFockBasis& to = basis(particles + 1);
  Matrix a = Matrix::Zero(to.dim(), from.dim());
  std::vector<int> target;
  for (int col = 0; col < from.dim(); ++col) {
    const std::vector<int>& occ = from.occupation(col);
    int n = occ[static_cast<size_t>(site)];
    target = occ;
    target[static_cast<size_t>(site)] += 1;
    a(to.index_of(target), col) = std::sqrt(static_cast<double>(n + 1));
  }
  return a;
}

FermiFockBasis::FermiFockBasis(int sites, int n_up, int n_down)
    : sites_(sites), n_up_(n_up), n_down_(n_down) {
  if (sites < 1 || sites > 30) throw std::invalid_argument("FermiFockBasis: site count out of range");
  if (n_up < 0 || n_up > sites || n_down < 0 || n_down > sites) {
    throw std::invalid_argument("FermiFockBasis: particle number out of range");
  }
  std::vector<std::uint64_t> up_masks, down_masks;
  for (std::uint64_t m = 0; m < (1ull << sites); ++m) {
    int pop = std::popcount(m);
    if (pop == n_up) up_masks.push_back(m);
    if (pop == n_down) down_masks.push_back(m);
  }
  for (std::uint64_t up : up_masks) {
    for (std::uint64_t down : down_masks) {
      std::uint64_t state = 0;
      for (int s = 0; s < sites; ++s) {
        if ((up >> s) & 1u) state |= 1ull << mode(Spin::Up, s);
        if ((down >> s) & 1u) state |= 1ull << mode(Spin::Down, s);
      }
      states_.push_back(state);
    }
  }
  for (size_t i = 0; i < states_.size(); ++i) index_[states_[i]] = static_cast<int>(i);
}

std::uint64_t FermiFockBasis::mask(int index) const {
  if (index < 0 || index >= dim()) throw std::out_of_range("FermiFockBasis: index out of range");
  return states_[static_cast<size_t>(index)];
}

int FermiFockBasis::occupation(int index, Spin spin, int site) const {
  if (site < 0 || site >= sites_) throw std::out_of_range("FermiFockBasis: site out of range");
  return static_cast<int>((mask(index) >> mode(spin, site)) & 1ull);
}

int FermiFockBasis::index_of(std::uint64_t mask) const {
  auto it = index_.find(mask);
  if (it == index_.end()) throw std::out_of_range("FermiFockBasis: state not in this sector");
  return it->second;
}

std::string FermiFockBasis::dump() const {
  std::ostringstream os;
  for (int i = 0; i < dim(); ++i) {
    for (int s = 0; s < sites_; ++s) {
      if (s > 0) os << " ";
      os << occupation(i, Spin::Up, s);
    }
    for (int s = 0; s < sites_; ++s) os << " " << occupation(i, Spin::Down, s);
    os << "\n";
  }
  return os.str();
}

const FermiFockBasis& FermiLadder::basis(int n_up, int n_down) {
  auto key = std::make_pair(n_up, n_down);
  auto it = bases_.find(key);
  if (it == bases_.end()) {
    it = bases_.emplace(key, FermiFockBasis(sites_, n_up, n_down)).first;
  }
  return it->second;
}

Matrix FermiLadder::annihilator(int n_up, int n_down, Spin spin, int site) {
  int to_up = n_up - (spin == Spin::Up ? 1 : 0);
  int to_down = n_down - (spin == Spin::Down ? 1 : 0);
  if (to_up < 0 || to_down < 0) throw std::invalid_argument("FermiLadder::annihilator: empty sector below");
  const FermiFockBasis& from = basis(n_up, n_down);
  const FermiFockBasis& to = basis(to_up, to_down);
  const int m = FermiFockBasis::mode(spin, site);
  if (site < 0 || site >= sites_) throw std::out_of_range("FermiLadder::annihilator: site out of range");
  Matrix a = Matrix::Zero(to.dim(), from.dim());
  for (int col = 0; col < from.dim(); ++col) {
    std::uint64_t state = from.mask(col);
    if (!((state >> m) & 1ull)) continue;
    std::uint64_t lower = state & ((1ull << m) - 1ull);
    double sign = (std::popcount(lower) % 2 == 0) ? 1.0 : -1.0;
    a(to.index_of(state & ~(1ull << m)), col) = sign;
  }
  return a;
}

Matrix FermiLadder::creator(int n_up, int n_down, Spin spin, int site) {
  int to_up = n_up + (spin == Spin::Up ? 1 : 0);
  int to_down = n_down + (spin == Spin::Down ? 1 : 0);
  if (to_up > sites_ || to_down > sites_) throw std::invalid_argument("FermiLadder::creator: sector above is full");
  const FermiFockBasis& from = basis(n_up, n_down);
  const FermiFockBasis& to = basis(to_up, to_down);
  const int m = FermiFockBasis::mode(spin, site);
  if (site < 0 || site >= sites_) throw std::out_of_range("FermiLadder::creator: site out of range");
  Matrix a = Matrix::Zero(to.dim(), from.dim());
  for (int col = 0; col < from.dim(); ++col) {
    std::uint64_t state = from.mask(col);
    if ((state >> m) & 1ull) continue;
    std::uint64_t lower = state & ((1ull << m) - 1ull);
    double sign = (std::popcount(lower) % 2 == 0) ? 1.0 : -1.0;
    a(to.index_of(state | (1ull << m)), col) = sign;
  }
  return a;
}

Matrix FermiLadder::number_op(int n_up, int n_down, Spin spin, int site) {
  if (site < 0 || site >= sites_) throw std::out_of_range("FermiLadder::number_op: site out of range");
  const FermiFockBasis& sector = basis(n_up, n_down);
  Matrix n = Matrix::Zero(sector.dim(), sector.dim());
  for (int i = 0; i < sector.dim(); ++i) {
    n(i, i) = static_cast<double>(sector.occupation(i, spin, site));
  }
  return n;
}

}  // namespace lindprep
