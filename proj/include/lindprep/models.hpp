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

#include <array>
#include <string>
#include <vector>

#include "lindprep/fock.hpp"
#include "lindprep/process.hpp"
#include "lindprep/types.hpp"

namespace lindprep {

// ---------------------------------------------------------------------------
// Spin-1 chain with the bilinear-biquadratic bond term
//   h = S.S' + (S.S')^2 / 3,
// whose eigenvalues are 4/3 on the five-dimensional total-spin-2 space and
// -2/3 on the rest. The unique frustration-free ground space of the chain is
// pumped into by per-bond jumps.
// ---------------------------------------------------------------------------

Matrix aklt_bond_hamiltonian();  // 9x9 h
Matrix aklt_bond_projector();    // (2/3 + h)/2, rank 5

/// Total-spin coupled bond bases: the spin-2 multiplet ordered by m = -2..2
/// and the complement ordered spin-0 first, then spin-1 by m.
std::vector<Vector> aklt_coupled_basis_spin2();
std::vector<Vector> aklt_coupled_basis_low();

/// Ladder bond jump: maps the spin-2 basis stepwise into the complement,
/// c = sum_{i<5} |low_i><spin2_i| + |spin2_4><spin2_5| (1-based), so its
/// kernel on the bond is exactly the low multiplets.
Matrix aklt_bond_ladder();

enum class AkltVariant { Ladder, Twirl };

/// Twirl unitaries: clock-and-shift family X^(1+k/9) Z^(k mod 9) on the
/// nine-dimensional bond space.
std::vector<Matrix> aklt_twirl_unitaries(int count);

struct AkltModel {
  CompositeSpace space;
  LindbladProcess process;
  Matrix hamiltonian;    // chain Hamiltonian, for cross-checks
  bool periodic = true;
  AkltVariant variant = AkltVariant::Ladder;
};

AkltModel aklt_model(int n, bool periodic, AkltVariant variant = AkltVariant::Ladder, int n_twirl = 9,
                     double rate = 1.0);

/// Ground state of the chain Hamiltonian by exact diagonalization; throws
/// SolverError when the ground level is degenerate beyond tolerance.
Vector aklt_ground_state(const AkltModel& model, double degeneracy_tol = 1e-8);

// ---------------------------------------------------------------------------
// Driven Bose-Hubbard lattice: jumps c_ij = (a_i^dagger + a_j^dagger) x
// (a_i - a_j) over adjacent ordered pairs pump every fixed-N state into the
// zero-quasimomentum condensate. Periodic rings keep both bonds at M = 2.
// ---------------------------------------------------------------------------

struct BecModel {
  CompositeSpace space;
  BoseFockBasis basis;
  LindbladProcess process;
  Matrix hopping;       // H0 = -J sum over ordered adjacent pairs a_i^dag a_j
  Matrix interaction;   // sum_i a_i^dag a_i^dag a_i a_i / 2
  Vector target;        // normalized (sum_j a_j^dagger)^N |vac>
  std::vector<std::string> jump_labels;
};

/// The condensate amplitudes from the multinomial expansion, normalized.
Vector bec_state(const BoseFockBasis& basis);

BecModel bec_model(int sites, int particles, bool periodic = true, double j_hop = 1.0,
                   double u_int = 0.0, double rate = 1.0);

// ---------------------------------------------------------------------------
// Fermi-Hubbard eta condensate: the staggered pair-raising operator
// eta^dagger = M^{-1/2} sum_l (-1)^l f^dag_{up,l} f^dag_{down,l} satisfies
// H eta^dagger - eta^dagger H = U eta^dagger on a bipartite ring, making
// (eta^dagger)^N |0> an exact eigenstate at energy N U. Four families of
// quasi-local jumps single it out as the joint dark state.
// ---------------------------------------------------------------------------

struct EtaModel {
  CompositeSpace space;
  FermiFockBasis basis;
  LindbladProcess process;
  Matrix hamiltonian;  // Hubbard H on the (N, N) sector
  Vector target;       // normalized (eta^dagger)^N |0>
  std::vector<std::string> jump_labels;
  double j_hop = 1.0;
  double u_int = 1.0;
};

/// The pair-raising operator as a map from the (n, n) to the (n+1, n+1)
/// sector.
Matrix eta_raising(FermiLadder& ladder, int n);

/// Normalized (eta^dagger)^N |0> built by ladder application.
Vector eta_state(int sites, int pairs);

/// Hubbard Hamiltonian restricted to the (n_up, n_down) sector of a periodic
/// ring (both hopping directions per bond, double bond at M = 2).
Matrix hubbard_hamiltonian(FermiLadder& ladder, int n_up, int n_down, double j_hop, double u_int);

/// The four jump operators attached to the bond (l, l_next) within the
/// (n, n) sector: pair transport, spin-down assisted hopping, spin-up pair
/// breaking suppression and spin-down exchange.
std::array<Matrix, 4> eta_bond_jumps(FermiLadder& ladder, int n, int l, int l_next);

EtaModel eta_model(int sites, int pairs, double j_hop = 1.0, double u_int = 1.0, double rate = 1.0);

}  // namespace lindprep
