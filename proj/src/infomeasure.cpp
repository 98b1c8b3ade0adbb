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

#include "qent/infomeasure.hpp"

#include <cmath>
#include <limits>

namespace qent {

namespace {

// Mass of omega outside supp(phi), relative to Tr omega, above which the
// divergence is reported infinite.
constexpr double kLeakTol = 1e-9;
constexpr double kMarginalTol = 1e-9;

void require_same_square(const CMatrix& omega, const CMatrix& phi, const char* what) {
  if (omega.rows() != phi.rows() || omega.cols() != phi.cols()) {
    throw InvalidInput(std::string(what) + ": operands have different dimensions");
  }
}

// Weight phi given by its inverse square root and support projector.
struct WeightView {
  const CMatrix& phi;
  CMatrix inv_sqrt;
  CMatrix support;
};

WeightView view_of(const CMatrix& phi) {
  const Spectrum s = herm_eig(phi);
  return {phi, spectral_fn(s, [](double x) { return 1.0 / std::sqrt(x); }),
          spectral_fn(s, [](double) { return 1.0; })};
}

bool leaks(const CMatrix& omega, const CMatrix& support) {
  const double outside = real_trace(omega) - real_trace(support * omega);
  return outside > kLeakTol * std::max(real_trace(omega), 1e-300);
}

// Tr[phi eta(phi^{-1/2} omega phi^{-1/2})] = sum_k eta(x_k) <v_k|phi|v_k>.
double bs_value(const CMatrix& omega, const WeightView& w) {
  CMatrix x = w.inv_sqrt * omega * w.inv_sqrt;
  x = (0.5 * (x + x.adjoint())).eval();
  const Spectrum sx = herm_eig(x);
  double r = 0.0;
  for (Index k = 0; k < sx.eigenvalues.size(); ++k) {
    const double lam = sx.eigenvalues(k);
    if (lam <= 0.0) continue;
    const auto v = sx.eigenvectors.col(k);
    r += eta_scalar(lam) * (v.adjoint() * w.phi * v)(0, 0).real();
  }
  return r;
}

}  // namespace

InfoReport InfoReport::infinite() {
  return InfoReport{std::numeric_limits<double>::infinity(), false, false};
}

double vn_entropy(const CMatrix& density) {
  const Spectrum s = herm_eig(density);
  double h = 0.0;
  for (Index i = 0; i < s.eigenvalues.size(); ++i) h -= eta_scalar(s.eigenvalues(i));
  return h;
}

double vn_entropy(const AlgebraState& s) { return vn_entropy(s.density()); }

InfoReport bs_relative_entropy(const CMatrix& omega, const CMatrix& phi) {
  require_same_square(omega, phi, "bs_relative_entropy");
  require_psd(omega, "bs_relative_entropy");
  require_psd(phi, "bs_relative_entropy");
  const WeightView w = view_of(phi);
  if (leaks(omega, w.support)) return InfoReport::infinite();
  return InfoReport::of(bs_value(omega, w));
}

InfoReport umegaki_relative_entropy(const CMatrix& omega, const CMatrix& phi) {
  require_same_square(omega, phi, "umegaki_relative_entropy");
  require_psd(omega, "umegaki_relative_entropy");
  require_psd(phi, "umegaki_relative_entropy");
  if (leaks(omega, support_projector(phi))) return InfoReport::infinite();
  const double neg_entropy = -vn_entropy(omega);
  const double cross = (omega * log_support(phi)).trace().real();
  return InfoReport::of(neg_entropy - cross);
}

InfoReport entangled_information(const Coupling& c) {
  const Index db = c.dim_b();
  const Spectrum rs = herm_eig(c.rho());
  const CMatrix id_b = CMatrix::Identity(db, db);
  const CMatrix phi = kron(rs.eigenvectors * rs.eigenvalues.cwiseMax(0.0).asDiagonal() *
                               rs.eigenvectors.adjoint(),
                           id_b);
  WeightView w{phi, kron(spectral_fn(rs, [](double x) { return 1.0 / std::sqrt(x); }), id_b),
               kron(spectral_fn(rs, [](double) { return 1.0; }), id_b)};
  if (leaks(c.omega(), w.support)) return InfoReport::infinite();
  return InfoReport::of(bs_value(c.omega(), w));
}

double mean_conditional_entropy(const Ensemble& e) {
  e.validate();
  double h = 0.0;
  for (std::size_t n = 0; n < e.states.size(); ++n) h += e.weights[n] * vn_entropy(e.states[n]);
  return h;
}

InfoReport total_information(const Coupling& c) {
  const InfoReport e = entangled_information(c);
  if (!e.finite) return e;
  return InfoReport::of(e.value + vn_entropy(c.sigma()));
}

double q_entropy_closed(const AlgebraState& s) {
  double h = vn_entropy(s);
  for (Index i = 0; i < s.shape().num_blocks(); ++i) {
    if (!s.has_support(i)) continue;
    h += s.weight(i) * std::log(static_cast<double>(numerical_rank(s.normalized_block(i))));
  }
  return h;
}

double q_entropy_direct(const AlgebraState& s) {
  return total_information(standard_coupling(s)).value;
}

double q_conditional_entropy(const AlgebraState& s, const Coupling& c) {
  if (!(c.shape_b() == s.shape())) {
    throw InvalidInput("q_conditional_entropy: coupling acts on a different algebra");
  }
  if ((c.sigma() - s.density()).cwiseAbs().maxCoeff() > kMarginalTol) {
    throw InvalidInput("q_conditional_entropy: B-marginal of the coupling differs from the state");
  }
  return q_entropy_closed(s) - total_information(c).value;
}

}  // namespace qent
