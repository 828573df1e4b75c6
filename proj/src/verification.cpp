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

#include "lindprep/verification.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>


namespace lindprep {

namespace {

// Orthonormal column copies; dependent inputs are dropped.
std::vector<Vector> orthonormal_copy(const std::vector<Vector>& raw, double drop_tol = 1e-10) {
  std::vector<Vector> basis;
  for (const Vector& candidate : raw) {
    Vector w = candidate;
    double original = w.norm();
    if (original == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& b : basis) w -= b.dot(w) * b;
    }
    if (w.norm() <= drop_tol * original) continue;
    w.normalize();
    basis.push_back(std::move(w));
  }
  return basis;
}

// Residual after projecting w onto the span; w is reduced in place.
double orthogonalize_against(Vector& w, const std::vector<Vector>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vector& b : basis) w -= b.dot(w) * b;
  }
  return w.norm();
}

// Joint kernel of the stacked operators via one SVD.
std::vector<Vector> joint_kernel(const std::vector<Matrix>& ops, int dim, double rel_tol) {
  if (ops.empty()) {
    std::vector<Vector> all;
    for (int i = 0; i < dim; ++i) {
      Vector e = Vector::Zero(dim);
      e(i) = 1.0;
      all.push_back(e);
    }
    return all;
  }
  Matrix stacked(static_cast<long>(ops.size()) * dim, dim);
  for (size_t l = 0; l < ops.size(); ++l) {
    stacked.middleRows(static_cast<long>(l) * dim, dim) = ops[l];
  }
  Eigen::BDCSVD<Matrix> svd(stacked, Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  std::vector<Vector> kernel;
  if (sigma_max == 0.0) {
    for (int i = 0; i < dim; ++i) {
      Vector e = Vector::Zero(dim);
      e(i) = 1.0;
      kernel.push_back(e);
    }
    return kernel;
  }
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) <= rel_tol * sigma_max) kernel.push_back(svd.matrixV().col(i));
  }
  return kernel;
}

}  // namespace

Theorem1Report check_theorem1(const LindbladProcess& process, const Vector& phi, double rel_tol) {
  if (phi.size() != process.dim()) throw std::invalid_argument("check_theorem1: state dimension mismatch");
  double nrm = phi.norm();
  if (nrm == 0.0) throw std::invalid_argument("check_theorem1: zero state");
  Vector state = phi / nrm;

  const int d = process.dim();
  Matrix q = Matrix::Zero(d, d);
  for (const Jump& j : process.jumps()) q += j.rate * (j.op.adjoint() * j.op);
  if (process.has_hamiltonian()) q -= Complex(0, 1) * process.hamiltonian();

  Theorem1Report report;
  report.scale = std::max(max_abs(q), 1e-300);

  Vector qd_phi = q.adjoint() * state;
  report.lambda = state.dot(qd_phi);
  report.q_residual = (qd_phi - report.lambda * state).norm();

  bool jumps_ok = true;
  double balance = 0.0;
  for (const Jump& j : process.jumps()) {
    Vector c_phi = j.op * state;
    Complex mu = state.dot(c_phi);
    double residual = (c_phi - mu * state).norm();
    report.jump_eigenvalues.push_back(mu);
    report.jump_residuals.push_back(residual);
    double op_scale = std::max(max_abs(j.op), 1e-300);
    if (residual > rel_tol * op_scale) jumps_ok = false;
    balance += j.rate * std::norm(mu);
  }
  report.balance_residual = std::abs(balance - report.lambda.real());

  report.stationary = jumps_ok && report.q_residual <= rel_tol * report.scale &&
                      report.balance_residual <= rel_tol * report.scale;
  return report;
}

DarkSpaceResult dark_space(const LindbladProcess& process, double rel_tol) {
  DarkSpaceResult result;
  const int d = process.dim();
  std::vector<Vector> kernel = joint_kernel(process.jump_operators(), d, rel_tol);
  kernel = orthonormal_copy(kernel);

  if (kernel.empty()) {
    result.is_subspace = true;
    return result;
  }

  if (!process.has_hamiltonian()) {
    result.vectors = std::move(kernel);
    result.is_subspace = true;
    return result;
  }

  // Intersect the joint jump kernel with eigenspaces of H: compress H to the
  // kernel, then within each (possibly degenerate) eigenvalue block keep the
  // combinations the full H does not leak out of the block.
  const Matrix& h = process.hamiltonian();
  const double h_scale = std::max(max_abs(h), 1e-300);
  const int k = static_cast<int>(kernel.size());
  Matrix v(d, k);
  for (int i = 0; i < k; ++i) v.col(i) = kernel[static_cast<size_t>(i)];
  Matrix compressed = v.adjoint() * h * v;
  compressed = (compressed + compressed.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(compressed);
  if (es.info() != Eigen::Success) throw SolverError("dark_space: compressed eigensolver failed");

  const double group_radius = std::max(rel_tol * h_scale, 1e-12 * h_scale);
  int i = 0;
  while (i < k) {
    int j = i + 1;
    while (j < k && es.eigenvalues()(j) - es.eigenvalues()(i) <= group_radius) ++j;
    double eps = es.eigenvalues().segment(i, j - i).mean();

    // candidates for this eigenvalue, leakage = (H - eps) restricted to them
    Matrix block = v * es.eigenvectors().middleCols(i, j - i);
    Matrix leak = h * block - eps * block;
    Eigen::BDCSVD<Matrix> svd(leak, Eigen::ComputeThinV);
    const RealVector& sv = svd.singularValues();
    double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
    std::vector<int> members;
    for (int c = 0; c < sv.size(); ++c) {
      if (sigma_max <= rel_tol * h_scale || sv(c) <= rel_tol * h_scale) {
        Vector kept = block * svd.matrixV().col(c);
        kept.normalize();
        members.push_back(static_cast<int>(result.vectors.size()));
        result.vectors.push_back(std::move(kept));
      }
    }
    if (!members.empty()) {
      result.groups.push_back(std::move(members));
      result.h_eigenvalues.push_back(eps);
    }
    i = j;
  }

  if (static_cast<int>(result.vectors.size()) < k) {
    std::ostringstream msg;
    msg << (k - static_cast<int>(result.vectors.size()))
        << " joint-kernel direction(s) leak between Hamiltonian eigenspaces and were dropped";
    result.warnings.push_back(msg.str());
  }
  result.is_subspace = result.groups.size() <= 1;
  return result;
}

std::string to_string(CertificateMethod method) {
  switch (method) {
    case CertificateMethod::KernelDimension:
      return "kernel-dimension";
    case CertificateMethod::KrylovReachability:
      return "krylov-reachability";
    case CertificateMethod::InvariantSubspaceProbe:
      return "invariant-subspace-probe";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Unique:
      return "unique";
    case Verdict::NotUnique:
      return "not-unique";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

UniquenessCertificate krylov_reachability(const std::vector<Matrix>& jumps, const Vector& target,
                                          int max_degree, double rank_tol) {
  const int d = static_cast<int>(target.size());
  if (d < 1) throw std::invalid_argument("krylov_reachability: empty target");
  for (const Matrix& c : jumps) {
    if (c.rows() != d || c.cols() != d) throw std::invalid_argument("krylov_reachability: dimension mismatch");
  }
  if (target.norm() == 0.0) throw std::invalid_argument("krylov_reachability: zero target");
  if (max_degree < 0) max_degree = 4 * d;

  UniquenessCertificate cert;
  cert.method = CertificateMethod::KrylovReachability;
  cert.space_dim = d;

  std::vector<Vector> basis;
  basis.push_back(target.normalized());
  std::vector<Vector> frontier = basis;
  int degree = 0;
  while (!frontier.empty() && degree < max_degree && static_cast<int>(basis.size()) < d) {
    ++degree;
    std::vector<Vector> next;
    for (const Vector& b : frontier) {
      for (const Matrix& c : jumps) {
        Vector w = c.adjoint() * b;
        double original = w.norm();
        if (original == 0.0) continue;
        double residual = orthogonalize_against(w, basis);
        if (residual > rank_tol * original) {
          w /= residual;
          basis.push_back(w);
          next.push_back(std::move(w));
          if (static_cast<int>(basis.size()) == d) break;
        }
      }
      if (static_cast<int>(basis.size()) == d) break;
    }
    frontier = std::move(next);
  }

  cert.dimension_reached = static_cast<int>(basis.size());
  cert.degree_used = degree;
  if (cert.dimension_reached == d) {
    cert.verdict = Verdict::Unique;
    cert.notes.push_back("adjoint-jump monomials applied to the target span the full space");
  } else {
    cert.verdict = Verdict::Inconclusive;
    std::ostringstream msg;
    msg << "closure stalled at dimension " << cert.dimension_reached << " of " << d << " after degree "
        << degree;
    cert.notes.push_back(msg.str());
  }
  return cert;
}

UniquenessCertificate kernel_dimension_certificate(const Superoperator& super, double rel_tol,
                                                   const SpectrumOptions& options) {
  UniquenessCertificate cert;
  cert.method = CertificateMethod::KernelDimension;
  cert.space_dim = super.dim();

  NullspaceResult nullspace = stationary_space(super, rel_tol, options);
  cert.kernel_dim = nullspace.dim();
  cert.notes = nullspace.warnings;

  bool sparse_path = !super.has_dense();
  bool kernel_may_be_larger = false;
  for (const std::string& w : nullspace.warnings) {
    if (w.find("may be larger") != std::string::npos) kernel_may_be_larger = true;
  }

  if (cert.kernel_dim == 1 && !kernel_may_be_larger) {
    cert.verdict = Verdict::Unique;
  } else if (cert.kernel_dim > 1) {
    cert.verdict = Verdict::NotUnique;
  } else {
    cert.verdict = Verdict::Inconclusive;
    if (cert.kernel_dim == 0) {
      cert.notes.push_back("no kernel element found; a trace-preserving generator always has one");
    }
  }
  if (sparse_path) {
    cert.notes.push_back("sparse path: the kernel count covers only the converged eigenvalues");
  }
  return cert;
}

UniquenessCertificate invariant_subspace_probe(const LindbladProcess& process,
                                               const std::vector<Vector>& dark_vectors, double rel_tol) {
  if (process.jump_count() == 0) throw std::invalid_argument("invariant_subspace_probe: no jumps");
  const int d = process.dim();

  UniquenessCertificate cert;
  cert.method = CertificateMethod::InvariantSubspaceProbe;
  cert.space_dim = d;

  // The support of any stationary state is invariant under every jump and
  // under K = sum_l g_l c_l^dagger c_l + i H, so a nonzero subspace of the
  // dark complement invariant under all of them certifies a second
  // stationary state.
  std::vector<Matrix> ops;
  Matrix damping = Matrix::Zero(d, d);
  for (const Jump& jump : process.jumps()) {
    ops.push_back(jump.op);
    damping += jump.rate * (jump.op.adjoint() * jump.op);
  }
  if (process.has_hamiltonian()) damping += Complex(0, 1) * process.hamiltonian();
  ops.push_back(std::move(damping));
  double op_scale = 0.0;
  for (const Matrix& a : ops) op_scale = std::max(op_scale, max_abs(a));
  if (op_scale <= 0.0) op_scale = 1.0;

  std::vector<Vector> dark = orthonormal_copy(dark_vectors);
  const int n_dark = static_cast<int>(dark.size());
  if (n_dark == 0) {
    // Refutation works by exhibiting a stationary state disjoint from a known
    // dark one; without a dark state there is nothing to contradict.
    cert.verdict = Verdict::Inconclusive;
    cert.dimension_reached = 0;
    cert.iterations_used = 0;
    cert.notes.push_back("no dark states supplied; the probe needs a reference stationary state");
    return cert;
  }
  if (d - n_dark <= 0) {
    cert.verdict = Verdict::Inconclusive;
    cert.notes.push_back("the dark span already covers the space; nothing to probe");
    return cert;
  }

  Matrix phi(d, n_dark);
  for (int j = 0; j < n_dark; ++j) phi.col(j) = dark[j];
  Eigen::BDCSVD<Matrix> svd(phi, Eigen::ComputeFullU);
  Matrix v = svd.matrixU().rightCols(d - n_dark);

  // Shrink to the largest invariant subspace: repeatedly keep only the
  // directions every operator maps back inside.
  cert.iterations_used = 0;
  const double cut = rel_tol * op_scale;
  double worst_leak = 0.0;
  while (v.cols() > 0) {
    ++cert.iterations_used;
    const int m = static_cast<int>(v.cols());
    Matrix stacked(static_cast<Eigen::Index>(ops.size()) * d, m);
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const Matrix av = ops[i] * v;
      stacked.middleRows(static_cast<Eigen::Index>(i) * d, d) = av - v * (v.adjoint() * av);
    }
    Eigen::BDCSVD<Matrix> svd(stacked, Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    int kept = 0;
    for (int j = 0; j < sigma.size(); ++j) {
      if (sigma(j) <= cut) ++kept;
    }
    if (kept == m) {
      worst_leak = sigma.size() > 0 ? sigma(0) : 0.0;
      break;
    }
    v = (v * svd.matrixV().rightCols(kept)).eval();
  }

  if (v.cols() > 0) {
    cert.verdict = Verdict::NotUnique;
    cert.dimension_reached = static_cast<int>(v.cols());
    cert.max_residual = worst_leak;
    for (int j = 0; j < v.cols(); ++j) cert.witness.push_back(v.col(j));
    std::ostringstream msg;
    msg << "the jumps and the damping operator leave a " << v.cols()
        << "-dimensional subspace orthogonal to the dark span invariant; a stationary state is "
           "supported inside it";
    cert.notes.push_back(msg.str());
  } else {
    cert.verdict = Verdict::Inconclusive;
    cert.dimension_reached = 0;
    cert.notes.push_back(
        "no jump- and damping-invariant subspace orthogonal to the dark span; stationary states "
        "overlapping the dark span are not excluded");
  }
  return cert;
}

std::string format_certificate(const UniquenessCertificate& cert) {
  std::ostringstream os;
  os << "method: " << to_string(cert.method) << "\n";
  os << "verdict: " << to_string(cert.verdict) << "\n";
  os << "space_dim: " << cert.space_dim << "\n";
  if (cert.kernel_dim >= 0) os << "kernel_dim: " << cert.kernel_dim << "\n";
  if (cert.dimension_reached >= 0) os << "dimension_reached: " << cert.dimension_reached << "\n";
  if (cert.degree_used >= 0) os << "degree_used: " << cert.degree_used << "\n";
  if (cert.iterations_used >= 0) os << "iterations_used: " << cert.iterations_used << "\n";
  os << "max_residual: " << format_double(cert.max_residual) << "\n";
  os << "witness_dim: " << cert.witness.size() << "\n";
  for (const std::string& note : cert.notes) os << "note: " << note << "\n";
  return os.str();
}

}  // namespace lindprep
