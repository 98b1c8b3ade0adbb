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

#ifndef QENT_INFOMEASURE_HPP
#define QENT_INFOMEASURE_HPP

#include "qent/coupling.hpp"

/**
 * @file infomeasure.hpp
 * @brief Entropies and information functionals, all in nats.
 *
 * The relative entropy used for entangled information is the
 * Belavkin-Staszewski divergence
 *
 *     R(omega : phi) = Tr omega ln(omega^{1/2} phi^{-1} omega^{1/2}),
 *
 * evaluated as Tr[phi eta(phi^{-1/2} omega phi^{-1/2})] with eta(x) = x ln x
 * on the support of phi. phi is a weight (any PSD operator); omega must be
 * supported inside supp(phi), otherwise the divergence is infinite.
 */

namespace qent {

struct InfoReport {
  double value = 0.0;  // nats; +inf when support_ok is false
  bool finite = true;
  bool support_ok = true;

  static InfoReport infinite();
  static InfoReport of(double v) { return InfoReport{v, true, true}; }
};

/// S = -Tr sigma ln sigma.
[[nodiscard]] double vn_entropy(const CMatrix& density);
[[nodiscard]] double vn_entropy(const AlgebraState& s);

/// Belavkin-Staszewski relative entropy of omega with respect to phi.
[[nodiscard]] InfoReport bs_relative_entropy(const CMatrix& omega, const CMatrix& phi);

/// Umegaki relative entropy Tr omega (ln omega - ln phi).
[[nodiscard]] InfoReport umegaki_relative_entropy(const CMatrix& omega, const CMatrix& phi);

/// E(pi) = R(omega : rho (x) I), rho^{-1} taken as the quasi-inverse.
[[nodiscard]] InfoReport entangled_information(const Coupling& c);

/// sum_n mu(n) S(sigma_n).
[[nodiscard]] double mean_conditional_entropy(const Ensemble& e);

/// I(pi) = E(pi) + S(sigma).
[[nodiscard]] InfoReport total_information(const Coupling& c);

/// q-entropy from the block decomposition:
/// H = S(sigma) + sum_i p(i) ln rank sigma_i.
[[nodiscard]] double q_entropy_closed(const AlgebraState& s);

/// q-entropy as the total information of the standard coupling.
[[nodiscard]] double q_entropy_direct(const AlgebraState& s);

/// H(pi) = H(sigma) - I(pi); the B-marginal of c must equal s within 1e-9.
[[nodiscard]] double q_conditional_entropy(const AlgebraState& s, const Coupling& c);

}  // namespace qent

#endif  // QENT_INFOMEASURE_HPP
