// Copyright 2026 The qent Authors
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

#include "qent/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qent {

double Spectrum::support_threshold() const {
  if (eigenvalues.size() == 0) return 0.0;
  return kSupportCutoff * std::max(eigenvalues(0), 0.0);
}

Index Spectrum::rank() const {
  const double cut = support_threshold();
  Index r = 0;
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    if (eigenvalues(i) > cut && eigenvalues(i) > 0.0) ++r;
  }
  return r;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, FactorDims dims, Keep keep) {
  const Index da = dims.first;
  const Index db = dims.second;
  if (da <= 0 || db <= 0 || m.rows() != da * db || m.cols() != da * db) {
    throw InvalidInput("partial_trace: matrix is " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(da * db) +
                       " square");
  }
  if (keep == Keep::First) {
    CMatrix out = CMatrix::Zero(da, da);
    for (Index h = 0; h < db; ++h) {
      for (Index a = 0; a < da; ++a) {
        for (Index a2 = 0; a2 < da; ++a2) out(a, a2) += m(a * db + h, a2 * db + h);
      }
    }
    return out;
  }
  CMatrix out = CMatrix::Zero(db, db);
  for (Index a = 0; a < da; ++a) out += m.block(a * db, a * db, db, db);
  return out;
}

bool all_finite(const CMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

bool is_hermitian(const CMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = m.norm();
  return (m - m.adjoint()).norm() <= rel_tol * std::max(scale, 1e-300);
}

Spectrum herm_eig(const CMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("herm_eig: matrix is not square");
  if (!all_finite(m)) throw InvalidInput("herm_eig: matrix has non-finite entries");
  if (!is_hermitian(m)) throw InvalidInput("herm_eig: matrix is not Hermitian");
  const CMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw InvalidInput("herm_eig: eigensolver failed");
  // Eigen sorts ascending.
  const Index n = m.rows();
  Spectrum s{RVector(n), CMatrix(n, n)};
  for (Index i = 0; i < n; ++i) {
    s.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
    s.eigenvectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return s;
}

namespace {

void check_psd_spectrum(const Spectrum& s, const char* what) {
  if (s.eigenvalues.size() == 0) return;
  const double scale = std::max(1.0, s.eigenvalues.cwiseAbs().maxCoeff());
  const double lowest = s.eigenvalues(s.eigenvalues.size() - 1);
  if (lowest < -kPsdTol * scale) {
    throw InvalidInput(std::string(what) + ": matrix is not positive semidefinite (eigenvalue " +
                       std::to_string(lowest) + ")");
  }
}

}  // namespace

CMatrix spectral_fn(const Spectrum& s, const std::function<double(double)>& f) {
  check_psd_spectrum(s, "spectral_fn");
  const Index n = s.eigenvalues.size();
  const double cut = s.support_threshold();
  RVector mapped = RVector::Zero(n);
  for (Index i = 0; i < n; ++i) {
    const double lam = s.eigenvalues(i);
    if (lam > cut && lam > 0.0) mapped(i) = f(lam);
  }
  return s.eigenvectors * mapped.asDiagonal() * s.eigenvectors.adjoint();
}

CMatrix spectral_fn(const CMatrix& m, const std::function<double(double)>& f) {
  return spectral_fn(herm_eig(m), f);
}

double eta_scalar(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

CMatrix sqrt_psd(const CMatrix& m) {
  return spectral_fn(m, [](double x) { return std::sqrt(x); });
}

CMatrix log_support(const CMatrix& m) {
  return spectral_fn(m, [](double x) { return std::log(x); });
}

CMatrix eta(const CMatrix& m) { return spectral_fn(m, eta_scalar); }

CMatrix pinv_psd(const CMatrix& m) {
  return spectral_fn(m, [](double x) { return 1.0 / x; });
}

CMatrix inv_sqrt_psd(const CMatrix& m) {
  return spectral_fn(m, [](double x) { return 1.0 / std::sqrt(x); });
}

CMatrix tilde(const CMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("tilde: matrix is not square");
  return m.transpose();
}

CMatrix support_projector(const CMatrix& m) {
  return spectral_fn(m, [](double) { return 1.0; });
}

Index numerical_rank(const CMatrix& m) { return herm_eig(m).rank(); }

CVector vec_rows(const CMatrix& m) {
  CVector v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  }
  return v;
}

double min_eigenvalue(const CMatrix& m) {
  const Spectrum s = herm_eig(m);
  return s.eigenvalues.size() == 0 ? 0.0 : s.eigenvalues(s.eigenvalues.size() - 1);
}

void require_psd(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw InvalidInput(std::string(what) + ": matrix is not square");
  if (!all_finite(m)) throw InvalidInput(std::string(what) + ": matrix has non-finite entries");
  if (!is_hermitian(m)) throw InvalidInput(std::string(what) + ": matrix is not Hermitian");
  check_psd_spectrum(herm_eig(m), what);
}

}  // namespace qent
