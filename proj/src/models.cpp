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

#include "lindprep/models.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "lindprep/composite_space.hpp"
#include "lindprep/operators.hpp"

namespace lindprep {

namespace {

// local spin-1 basis in descending magnetization order: index 0, 1, 2 holds
// m = +1, 0, -1
Vector bond_ket(int i1, int i2) {
  Vector v = Vector::Zero(9);
  v(3 * i1 + i2) = 1.0;
  return v;
}

constexpr int kP1 = 0;
constexpr int kO0 = 1;
constexpr int kM1 = 2;

std::vector<std::pair<int, int>> chain_bonds(int n, bool periodic) {
  std::vector<std::pair<int, int>> bonds;
  for (int k = 0; k + 1 < n; ++k) bonds.emplace_back(k, k + 1);
  if (periodic) bonds.emplace_back(n - 1, 0);
  return bonds;
}

Matrix matrix_power(const Matrix& m, int exponent) {
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (int k = 0; k < exponent; ++k) out = out * m;
  return out;
}

}  // namespace

Matrix aklt_bond_hamiltonian() {
  Matrix ss = Eigen::kroneckerProduct(spin1::sx(), spin1::sx()).eval() +
              Eigen::kroneckerProduct(spin1::sy(), spin1::sy()).eval() +
              Eigen::kroneckerProduct(spin1::sz(), spin1::sz()).eval();
  return ss + (ss * ss) / 3.0;
}

Matrix aklt_bond_projector() {
  Matrix h = aklt_bond_hamiltonian();
  return 0.5 * ((2.0 / 3.0) * Matrix::Identity(9, 9) + h);
}

std::vector<Vector> aklt_coupled_basis_spin2() {
  const double s2 = std::sqrt(2.0);
  const double s6 = std::sqrt(6.0);
  std::vector<Vector> phi(5);
  phi[0] = bond_ket(kM1, kM1);
  phi[1] = (bond_ket(kO0, kM1) + bond_ket(kM1, kO0)) / s2;
  phi[2] = (bond_ket(kP1, kM1) + 2.0 * bond_ket(kO0, kO0) + bond_ket(kM1, kP1)) / s6;
  phi[3] = (bond_ket(kP1, kO0) + bond_ket(kO0, kP1)) / s2;
  phi[4] = bond_ket(kP1, kP1);
  return phi;
}

std::vector<Vector> aklt_coupled_basis_low() {
  const double s2 = std::sqrt(2.0);
  const double s3 = std::sqrt(3.0);
  std::vector<Vector> psi(4);
  psi[0] = (bond_ket(kP1, kM1) - bond_ket(kO0, kO0) + bond_ket(kM1, kP1)) / s3;
  psi[1] = (bond_ket(kO0, kM1) - bond_ket(kM1, kO0)) / s2;
  psi[2] = (bond_ket(kP1, kM1) - bond_ket(kM1, kP1)) / s2;
  psi[3] = (bond_ket(kP1, kO0) - bond_ket(kO0, kP1)) / s2;
  return psi;
}

Matrix aklt_bond_ladder() {
  std::vector<Vector> phi = aklt_coupled_basis_spin2();
  std::vector<Vector> psi = aklt_coupled_basis_low();
  Matrix c = Matrix::Zero(9, 9);
  for (int i = 0; i < 4; ++i) c += psi[static_cast<size_t>(i)] * phi[static_cast<size_t>(i)].adjoint();
  c += phi[3] * phi[4].adjoint();
  return c;
}

std::vector<Matrix> aklt_twirl_unitaries(int count) {
  if (count < 1) throw std::invalid_argument("aklt_twirl_unitaries: count must be positive");
  const Complex omega = std::exp(Complex(0.0, 2.0 * M_PI / 9.0));
  Matrix shift = Matrix::Zero(9, 9);
  for (int i = 0; i < 9; ++i) shift((i + 1) % 9, i) = 1.0;
  Matrix clock = Matrix::Zero(9, 9);
  for (int k = 0; k < 9; ++k) clock(k, k) = std::pow(omega, k);
  std::vector<Matrix> out;
  out.reserve(static_cast<size_t>(count));
  for (int a = 0; a < count; ++a) {
    out.push_back(matrix_power(shift, 1 + a / 9) * matrix_power(clock, a % 9));
  }
  return out;
}

AkltModel aklt_model(int n, bool periodic, AkltVariant variant, int n_twirl, double rate) {
  if (n < 2) throw std::invalid_argument("aklt_model: need at least two sites");
  if (rate <= 0.0) throw std::invalid_argument("aklt_model: rate must be positive");
  CompositeSpace space = CompositeSpace::qudits(n, 3);
  LindbladProcess process(space);

  std::vector<Matrix> bond_ops;
  if (variant == AkltVariant::Ladder) {
    bond_ops.push_back(aklt_bond_ladder());
  } else {
    Matrix projector = aklt_bond_projector();
    for (const Matrix& u : aklt_twirl_unitaries(n_twirl)) bond_ops.push_back(u * projector);
  }

  Matrix h_bond = aklt_bond_hamiltonian();
  Matrix hamiltonian = Matrix::Zero(space.dim(), space.dim());
  for (auto [a, b] : chain_bonds(n, periodic)) {
    for (const Matrix& op : bond_ops) {
      process.add_jump(QuasiLocalOperator::from_unsorted(op, {a, b}, space), rate);
    }
    hamiltonian += embed(QuasiLocalOperator::from_unsorted(h_bond, {a, b}, space)).matrix;
  }
  return AkltModel{space, std::move(process), std::move(hamiltonian), periodic, variant};
}

Vector aklt_ground_state(const AkltModel& model, double degeneracy_tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(model.hamiltonian);
  if (es.info() != Eigen::Success) throw SolverError("aklt_ground_state: eigensolver failed");
  const RealVector& w = es.eigenvalues();
  double scale = std::max(std::abs(w(0)), 1.0);
  if (w.size() > 1 && w(1) - w(0) <= degeneracy_tol * scale) {
    std::ostringstream msg;
    msg << "aklt_ground_state: ground level is degenerate (splitting " << format_double(w(1) - w(0))
        << "); open chains have a fourfold ground space";
    throw SolverError(msg.str());
  }
  return es.eigenvectors().col(0);
}

Vector bec_state(const BoseFockBasis& basis) {
  const int n = basis.particles();
  Vector v(basis.dim());
  for (int i = 0; i < basis.dim(); ++i) {
    const std::vector<int>& occ = basis.occupation(i);
    // multinomial amplitude N! / prod sqrt(n_k!)
    double amp = 1.0;
    for (int k = 2; k <= n; ++k) amp *= k;
    for (int nk : occ) {
      double f = 1.0;
      for (int k = 2; k <= nk; ++k) f *= k;
      amp /= std::sqrt(f);
    }
    v(i) = amp;
  }
  v.normalize();
  return v;
}

BecModel bec_model(int sites, int particles, bool periodic, double j_hop, double u_int, double rate) {
  if (sites < 2) throw std::invalid_argument("bec_model: need at least two sites");
  if (particles < 1) throw std::invalid_argument("bec_model: need at least one particle");
  if (rate <= 0.0) throw std::invalid_argument("bec_model: rate must be positive");

  BoseLadder ladder(sites);
  BoseFockBasis basis = ladder.basis(particles);
  CompositeSpace space = CompositeSpace::single(basis.dim());
  LindbladProcess process(space);

  std::vector<std::pair<int, int>> bonds;
  if (periodic) {
    for (int l = 0; l < sites; ++l) bonds.emplace_back(l, (l + 1) % sites);
  } else {
    for (int l = 0; l + 1 < sites; ++l) bonds.emplace_back(l, l + 1);
  }

  std::vector<std::string> labels;
  for (auto [i, j] : bonds) {
    for (auto [p, q] : {std::pair<int, int>{i, j}, std::pair<int, int>{j, i}}) {
      Matrix c = (ladder.creator(particles - 1, p) + ladder.creator(particles - 1, q)) *
                 (ladder.annihilator(particles, p) - ladder.annihilator(particles, q));
      process.add_jump(std::move(c), rate);
      std::ostringstream label;
      label << "pump " << p << "->" << q;
      labels.push_back(label.str());
    }
  }

  Matrix hopping = Matrix::Zero(basis.dim(), basis.dim());
  for (auto [i, j] : bonds) {
    hopping += -j_hop * (ladder.creator(particles - 1, i) * ladder.annihilator(particles, j) +
                         ladder.creator(particles - 1, j) * ladder.annihilator(particles, i));
  }

  Matrix interaction = Matrix::Zero(basis.dim(), basis.dim());
  for (int i = 0; i < basis.dim(); ++i) {
    double value = 0.0;
    for (int nk : basis.occupation(i)) value += 0.5 * nk * (nk - 1);
    interaction(i, i) = value;
  }

  Vector target = bec_state(basis);
  return BecModel{space,           std::move(basis),       std::move(process), std::move(hopping),
                  std::move(interaction), std::move(target), std::move(labels)};
}

Matrix eta_raising(FermiLadder& ladder, int n) {
  const int sites = ladder.sites();
  if (n < 0 || n >= sites) throw std::invalid_argument("eta_raising: sector out of range");
  const int from_dim = ladder.basis(n, n).dim();
  const int to_dim = ladder.basis(n + 1, n + 1).dim();
  Matrix e = Matrix::Zero(to_dim, from_dim);
  for (int l = 0; l < sites; ++l) {
    double sign = (l % 2 == 0) ? 1.0 : -1.0;
    e += sign * (ladder.creator(n, n + 1, Spin::Up, l) * ladder.creator(n, n, Spin::Down, l));
  }
  return e / std::sqrt(static_cast<double>(sites));
}

Vector eta_state(int sites, int pairs) {
  if (pairs < 0 || pairs > sites) throw std::invalid_argument("eta_state: pair count out of range");
  FermiLadder ladder(sites);
  Vector v = Vector::Ones(1);
  for (int n = 0; n < pairs; ++n) v = (eta_raising(ladder, n) * v).eval();
  double nrm = v.norm();
  if (nrm == 0.0) throw SolverError("eta_state: vanishing state");
  return v / nrm;
}

Matrix hubbard_hamiltonian(FermiLadder& ladder, int n_up, int n_down, double j_hop, double u_int) {
  const int sites = ladder.sites();
  if (sites < 2) throw std::invalid_argument("hubbard_hamiltonian: need at least two sites");
  const int dim = ladder.basis(n_up, n_down).dim();
  Matrix h = Matrix::Zero(dim, dim);
  for (int l = 0; l < sites; ++l) {
    int lp = (l + 1) % sites;
    for (Spin spin : {Spin::Up, Spin::Down}) {
      int from_up = n_up - (spin == Spin::Up ? 1 : 0);
      int from_down = n_down - (spin == Spin::Down ? 1 : 0);
      if (from_up < 0 || from_down < 0) continue;
      h += -j_hop * (ladder.creator(from_up, from_down, spin, l) * ladder.annihilator(n_up, n_down, spin, lp) +
                     ladder.creator(from_up, from_down, spin, lp) * ladder.annihilator(n_up, n_down, spin, l));
    }
  }
  for (int l = 0; l < sites; ++l) {
    h += u_int * (ladder.number_op(n_up, n_down, Spin::Up, l) * ladder.number_op(n_up, n_down, Spin::Down, l));
  }
  return h;
}

std::array<Matrix, 4> eta_bond_jumps(FermiLadder& ladder, int n, int l, int l_next) {
  const int sites = ladder.sites();
  if (n < 1 || n > sites) throw std::invalid_argument("eta_bond_jumps: sector out of range");
  if (l < 0 || l >= sites || l_next < 0 || l_next >= sites || l == l_next) {
    throw std::invalid_argument("eta_bond_jumps: bad bond");
  }
  const int dim = ladder.basis(n, n).dim();
  Matrix id = Matrix::Identity(dim, dim);

  // local pair creators (n-1, n-1) -> (n, n) and their adjoints within the bond
  auto pair_creator = [&](int site) {
    return Matrix(ladder.creator(n - 1, n, Spin::Up, site) * ladder.creator(n - 1, n - 1, Spin::Down, site));
  };
  Matrix eta_l = pair_creator(l);
  Matrix eta_lp = pair_creator(l_next);

  std::array<Matrix, 4> jumps;
  // staggered pair transport across the bond
  jumps[0] = (eta_l - eta_lp) * (eta_l.adjoint() + eta_lp.adjoint());
  // spin-down hop assisted by a spin-up particle on the receiving site
  jumps[1] = ladder.number_op(n, n, Spin::Up, l) *
                 (ladder.creator(n, n - 1, Spin::Down, l) * ladder.annihilator(n, n, Spin::Down, l_next)) +
             ladder.number_op(n, n, Spin::Up, l_next) *
                 (ladder.creator(n, n - 1, Spin::Down, l_next) * ladder.annihilator(n, n, Spin::Down, l));
  // symmetric spin-up hop restricted to doublon-free bonds
  Matrix holes = (id - ladder.number_op(n, n, Spin::Down, l)) * (id - ladder.number_op(n, n, Spin::Down, l_next));
  jumps[2] = (ladder.creator(n - 1, n, Spin::Up, l) + ladder.creator(n - 1, n, Spin::Up, l_next)) *
             (ladder.annihilator(n, n, Spin::Up, l) + ladder.annihilator(n, n, Spin::Up, l_next)) * holes;
  // spin-down exchange between two occupied-up sites
  jumps[3] = (ladder.creator(n, n - 1, Spin::Down, l) * ladder.annihilator(n, n, Spin::Down, l_next) +
              ladder.creator(n, n - 1, Spin::Down, l_next) * ladder.annihilator(n, n, Spin::Down, l)) *
             ladder.number_op(n, n, Spin::Up, l) * ladder.number_op(n, n, Spin::Up, l_next);
  return jumps;
}

EtaModel eta_model(int sites, int pairs, double j_hop, double u_int, double rate) {
  if (sites < 2) throw std::invalid_argument("eta_model: need at least two sites");
  if (sites % 2 != 0) throw std::invalid_argument("eta_model: the staggered sign needs an even ring");
  if (pairs < 1 || pairs > sites) throw std::invalid_argument("eta_model: pair count out of range");
  if (rate <= 0.0) throw std::invalid_argument("eta_model: rate must be positive");

  FermiLadder ladder(sites);
  FermiFockBasis basis = ladder.basis(pairs, pairs);
  CompositeSpace space = CompositeSpace::single(basis.dim());
  LindbladProcess process(space);

  Matrix hamiltonian = hubbard_hamiltonian(ladder, pairs, pairs, j_hop, u_int);
  process.set_hamiltonian(hamiltonian);

  static const char* kFamilyNames[4] = {"pair-transport", "assisted-down-hop", "projected-up-hop",
                                        "down-exchange"};
  std::vector<std::string> labels;
  for (int l = 0; l < sites; ++l) {
    int lp = (l + 1) % sites;
    std::array<Matrix, 4> bond = eta_bond_jumps(ladder, pairs, l, lp);
    for (int f = 0; f < 4; ++f) {
      process.add_jump(std::move(bond[static_cast<size_t>(f)]), rate);
      std::ostringstream label;
      label << "bond " << l << "-" << lp << " " << kFamilyNames[f];
      labels.push_back(label.str());
    }
  }

  Vector target = eta_state(sites, pairs);
  return EtaModel{space,      std::move(basis),  std::move(process), std::move(hamiltonian),
                  std::move(target), std::move(labels), j_hop,          u_int};
}

}  // namespace lindprep
