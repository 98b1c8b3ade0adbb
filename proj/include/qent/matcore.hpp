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

#ifndef QENT_MATCORE_HPP
#define QENT_MATCORE_HPP

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "qent/errors.hpp"

/**
 * @file matcore.hpp
 * @brief Dense complex matrix kernel.
 *
 * Tensor products, partial traces and the Hermitian spectral calculus used
 * by every information measure in the library. Conventions fixed here hold
 * repo-wide:
 *
 *  - a pair index (g, h) of G (x) H maps to g * dim(H) + h;
 *  - the conjugation J is entrywise complex conjugation in the standard
 *    basis, so the tilde operation JB^dagger J is the plain transpose;
 *  - eigenvalues at or below kSupportCutoff * (largest eigenvalue) are
 *    treated as exact zeros, with 0 ln 0 = 0 and pinv(0) = 0.
 */

namespace qent {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Relative eigenvalue cutoff defining the numerical support.
inline constexpr double kSupportCutoff = 1e-10;
/// Hermiticity slack, relative to the Frobenius norm of the input.
inline constexpr double kHermTol = 1e-9;
/// Allowed negative eigenvalue slack for PSD inputs.
inline constexpr double kPsdTol = 1e-9;

/// Eigen-decomposition of a Hermitian matrix, eigenvalues descending.
struct Spectrum {
  RVector eigenvalues;
  CMatrix eigenvectors;  // columns, unitary

  /// Number of eigenvalues above the relative support cutoff.
  [[nodiscard]] Index rank() const;
  [[nodiscard]] double support_threshold() const;
};

/// Which tensor factor a partial trace keeps.
enum class Keep { First, Second };

struct FactorDims {
  Index first;
  Index second;
};

[[nodiscard]] CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Tr_B m (Keep::First) or Tr_A m (Keep::Second) for m on A (x) B.
[[nodiscard]] CMatrix partial_trace(const CMatrix& m, FactorDims dims, Keep keep);

[[nodiscard]] bool is_hermitian(const CMatrix& m, double rel_tol = kHermTol);

/// Throws InvalidInput if m is not square and Hermitian within kHermTol.
[[nodiscard]] Spectrum herm_eig(const CMatrix& m);

/// Applies f to the support eigenvalues of a Hermitian PSD matrix; the
/// complement of the support is mapped to zero.
[[nodiscard]] CMatrix spectral_fn(const CMatrix& m, const std::function<double(double)>& f);
[[nodiscard]] CMatrix spectral_fn(const Spectrum& s, const std::function<double(double)>& f);

[[nodiscard]] CMatrix sqrt_psd(const CMatrix& m);
[[nodiscard]] CMatrix log_support(const CMatrix& m);
[[nodiscard]] CMatrix eta(const CMatrix& m);
[[nodiscard]] CMatrix pinv_psd(const CMatrix& m);
[[nodiscard]] CMatrix inv_sqrt_psd(const CMatrix& m);

/// x ln x with 0 ln 0 = 0.
[[nodiscard]] double eta_scalar(double x);

/// B~ = J B^dagger J; with the standard-basis J this is the transpose.
[[nodiscard]] CMatrix tilde(const CMatrix& m);

[[nodiscard]] CMatrix support_projector(const CMatrix& m);
[[nodiscard]] Index numerical_rank(const CMatrix& m);

/// Row-stacking vectorization: |M>_(i*cols + j) = M(i, j).
[[nodiscard]] CVector vec_rows(const CMatrix& m);

/// Smallest eigenvalue of a Hermitian matrix.
[[nodiscard]] double min_eigenvalue(const CMatrix& m);

/// Throws InvalidInput naming `what` when m is not Hermitian PSD.
void require_psd(const CMatrix& m, const char* what);

[[nodiscard]] bool all_finite(const CMatrix& m);

[[nodiscard]] inline double real_trace(const CMatrix& m) { return m.trace().real(); }

}  // namespace qent

#endif  // QENT_MATCORE_HPP
