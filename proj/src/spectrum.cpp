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

#include "lindprep/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lindprep/arnoldi.hpp"

namespace lindprep {

namespace {

void sort_clusters(std::vector<EigenvalueCluster>& clusters, double tie_eps) {
  std::sort(clusters.begin(), clusters.end(), [tie_eps](const EigenvalueCluster& a, const EigenvalueCluster& b) {
    if (std::abs(a.value.real() - b.value.real()) > tie_eps) return a.value.real() > b.value.real();
    return a.value.imag() < b.value.imag();
  });
}

// Orthonormalize the columns against each other (modified Gram-Schmidt, two
// passes); drops columns that become numerically dependent.
std::vector<Vector> orthonormalize(const std::vector<Vector>& raw, double drop_tol = 1e-10) {
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

// One-dimensional kernels hold a stationary density matrix up to scaling;
// larger kernels are returned as orthonormal matrices.
std::vector<Matrix> kernel_vectors_to_matrices(const std::vector<Vector>& basis, int dim,
                                               std::vector<std::string>& warnings) {
  std::vector<Matrix> out;
  out.reserve(basis.size());
  for (const Vector& v : basis) out.push_back(unvec(v, dim));
  if (out.size() == 1) {
    Matrix rho = (out[0] + out[0].adjoint()) / 2.0;
    Complex tr = rho.trace();
    if (std::abs(tr) > 1e-12 * static_cast<double>(dim)) {
      rho /= tr;
      out[0] = rho;
    } else {
      warnings.push_back("one-dimensional kernel has a traceless representative; left unnormalized");
    }
  }
  return out;
}

void analyze_clusters(SpectrumReport& report, double kernel_tol_abs, double tie_eps) {
  sort_clusters(report.clusters, tie_eps);
  int kernel_count = 0;
  double best_gap = 0.0;
  bool have_gap = false;
  for (const EigenvalueCluster& c : report.clusters) {
    double re = c.value.real();
    double im = c.value.imag();
    if (std::abs(re) <= kernel_tol_abs && std::abs(im) <= kernel_tol_abs) {
      kernel_count += c.multiplicity;
      continue;
    }
    if (std::abs(re) <= kernel_tol_abs && std::abs(im) > kernel_tol_abs) {
      report.imaginary_violations.push_back(c.value);
      continue;
    }
    if (re > kernel_tol_abs) {
      std::ostringstream msg;
      msg << "eigenvalue with positive real part " << format_double(re);
      report.warnings.push_back(msg.str());
      continue;
    }
    double candidate = -re;
    if (!have_gap || candidate < best_gap) {
      best_gap = candidate;
      have_gap = true;
    }
  }
  report.kernel_dim = kernel_count;
  if (have_gap) report.gap = best_gap;
  if (!report.imaginary_violations.empty()) {
    report.warnings.push_back("purely imaginary nonzero eigenvalues present; no spectral gap in the usual sense");
  }
}

struct DenseKernel {
  std::vector<Vector> vectors;
  std::vector<std::string> warnings;
};

DenseKernel dense_kernel(const Matrix& m, double rank_rel_tol) {
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  DenseKernel result;
  if (sigma_max == 0.0) {
    // zero generator: everything is stationary
    for (int i = 0; i < m.cols(); ++i) {
      Vector e = Vector::Zero(m.cols());
      e(i) = 1.0;
      result.vectors.push_back(e);
    }
    return result;
  }
  double cut = rank_rel_tol * sigma_max;
  int ambiguous = 0;
  for (int i = 0; i < sv.size(); ++i) {
    double rel = sv(i) / sigma_max;
    if (rel > 1e-12 && rel < 1e-8) ++ambiguous;
  }
  if (ambiguous > 0) {
    std::ostringstream msg;
    msg << ambiguous << " singular value(s) inside the rank ambiguity band [1e-12, 1e-8] of sigma_max";
    result.warnings.push_back(msg.str());
  }
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) <= cut) result.vectors.push_back(svd.matrixV().col(i));
  }
  return result;
}

}  // namespace

std::vector<EigenvalueCluster> cluster_eigenvalues(const std::vector<Complex>& values, double radius) {
  struct Accum {
    Complex sum;
    int count;
  };
  std::vector<Accum> accum;
  for (Complex v : values) {
    int best = -1;
    double best_dist = radius;
    for (size_t k = 0; k < accum.size(); ++k) {
      Complex mean = accum[k].sum / static_cast<double>(accum[k].count);
      double dist = std::abs(v - mean);
      if (dist <= best_dist) {
        best_dist = dist;
        best = static_cast<int>(k);
      }
    }
    if (best < 0) {
      accum.push_back(Accum{v, 1});
    } else {
      accum[static_cast<size_t>(best)].sum += v;
      accum[static_cast<size_t>(best)].count += 1;
    }
  }
  std::vector<EigenvalueCluster> clusters;
  clusters.reserve(accum.size());
  for (const Accum& a : accum) {
    clusters.push_back(EigenvalueCluster{a.sum / static_cast<double>(a.count), a.count});
  }
  return clusters;
}

SpectrumReport spectrum(const Superoperator& super, SpectrumMode mode, const SpectrumOptions& options) {
  SpectrumReport report;
  report.mode = mode;
  report.scale = super.scale();
  const double norm_scale = report.scale > 0.0 ? report.scale : 1.0;
  const double kernel_tol_abs = options.kernel_tol * norm_scale;
  const double radius_abs = options.cluster_radius * norm_scale;

  if (mode == SpectrumMode::Full) {
    if (!super.has_dense()) {
      throw std::invalid_argument("spectrum: full mode needs dense storage");
    }
    if (super.dim() > kDenseDimLimit) {
      throw std::invalid_argument("spectrum: full mode limited to dimension " + std::to_string(kDenseDimLimit));
    }
    Eigen::ComplexEigenSolver<Matrix> es(super.dense(), false);
    if (es.info() != Eigen::Success) throw SolverError("spectrum: dense eigensolver failed");
    std::vector<Complex> values(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    report.clusters = cluster_eigenvalues(values, radius_abs);
    analyze_clusters(report, kernel_tol_abs, radius_abs);

    // the kernel dimension and basis come from the SVD, which resolves rank
    // more reliably than eigenvalue magnitudes
    DenseKernel kernel = dense_kernel(super.dense(), options.rank_rel_tol);
    for (const std::string& w : kernel.warnings) report.warnings.push_back(w);
    std::vector<Vector> ortho = orthonormalize(kernel.vectors);
    if (static_cast<int>(ortho.size()) != report.kernel_dim) {
      std::ostringstream msg;
      msg << "kernel dimension from eigenvalues (" << report.kernel_dim << ") and from the SVD ("
          << ortho.size() << ") disagree; keeping the SVD count";
      report.warnings.push_back(msg.str());
      report.kernel_dim = static_cast<int>(ortho.size());
    }
    report.kernel_basis = kernel_vectors_to_matrices(ortho, super.dim(), report.warnings);
    return report;
  }

  // gap-only: shift-invert iteration near zero on the sparse form
  if (super.dim() > kSparseDimLimit) {
    throw std::invalid_argument("spectrum: dimension exceeds the sparse limit " + std::to_string(kSparseDimLimit));
  }
  SparseCMatrix sparse = super.to_sparse();
  ArnoldiOptions arnoldi;
  arnoldi.nev = std::min(options.nev, super.super_dim());
  arnoldi.max_subspace = options.max_subspace;
  arnoldi.tol = options.arnoldi_tol;
  arnoldi.seed = options.seed;
  Complex shift(options.shift_fraction * norm_scale, 0.0);
  ArnoldiResult eigs = shift_invert_eigs(sparse, shift, arnoldi);

  double worst_residual = 0.0;
  for (double r : eigs.residuals) worst_residual = std::max(worst_residual, r);
  if (worst_residual > 1e-8 * norm_scale) {
    std::ostringstream msg;
    msg << "largest eigenpair residual " << format_double(worst_residual) << " exceeds 1e-8 * scale";
    report.warnings.push_back(msg.str());
  }

  report.clusters = cluster_eigenvalues(eigs.values, radius_abs);
  analyze_clusters(report, kernel_tol_abs, radius_abs);
  report.warnings.push_back("gap-only mode: eigenvalues, kernel and gap are taken from the " +
                            std::to_string(eigs.values.size()) + " converged eigenvalues nearest zero");

  std::vector<Vector> kernel_raw;
  for (size_t i = 0; i < eigs.values.size(); ++i) {
    if (std::abs(eigs.values[i]) <= kernel_tol_abs) kernel_raw.push_back(eigs.vectors.col(static_cast<int>(i)));
  }
  std::vector<Vector> ortho = orthonormalize(kernel_raw);
  report.kernel_dim = static_cast<int>(ortho.size());
  report.kernel_basis = kernel_vectors_to_matrices(ortho, super.dim(), report.warnings);
  return report;
}

NullspaceResult stationary_space(const Superoperator& super, double rel_tol, const SpectrumOptions& options) {
  NullspaceResult result;
  const double norm_scale = super.scale() > 0.0 ? super.scale() : 1.0;
  if (super.has_dense()) {
    DenseKernel kernel = dense_kernel(super.dense(), rel_tol);
    result.warnings = kernel.warnings;
    std::vector<Vector> ortho = orthonormalize(kernel.vectors);
    result.basis = kernel_vectors_to_matrices(ortho, super.dim(), result.warnings);
    return result;
  }

  SparseCMatrix sparse = super.to_sparse();
  ArnoldiOptions arnoldi;
  arnoldi.nev = std::min(options.nev, super.super_dim());
  arnoldi.max_subspace = options.max_subspace;
  arnoldi.tol = options.arnoldi_tol;
  arnoldi.seed = options.seed;
  Complex shift(options.shift_fraction * norm_scale, 0.0);
  ArnoldiResult eigs = shift_invert_eigs(sparse, shift, arnoldi);

  std::vector<Vector> kernel_raw;
  for (size_t i = 0; i < eigs.values.size(); ++i) {
    if (std::abs(eigs.values[i]) <= options.kernel_tol * norm_scale) {
      kernel_raw.push_back(eigs.vectors.col(static_cast<int>(i)));
    }
  }
  if (kernel_raw.size() == eigs.values.size()) {
    result.warnings.push_back("every converged eigenvalue sits in the kernel; the kernel may be larger");
  }
  result.warnings.push_back("sparse path: kernel restricted to the converged eigenvalues nearest zero");
  std::vector<Vector> ortho = orthonormalize(kernel_raw);
  result.basis = kernel_vectors_to_matrices(ortho, super.dim(), result.warnings);
  return result;
}

double relaxation_time(const SpectrumReport& report) {
  if (!report.gap.has_value()) throw SolverError("relaxation_time: the report carries no gap");
  double gap = *report.gap;
  if (gap <= 0.0) throw SolverError("relaxation_time: non-positive gap");
  return 1.0 / gap;
}

void write_spectrum_csv(std::ostream& os, const SpectrumReport& report) {
  os << "re,im,multiplicity\n";
  for (const EigenvalueCluster& c : report.clusters) {
    os << format_double(c.value.real()) << "," << format_double(c.value.imag()) << "," << c.multiplicity
       << "\n";
  }
}

}  // namespace lindprep
