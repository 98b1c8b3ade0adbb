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

#ifndef QENT_COUPLING_HPP
#define QENT_COUPLING_HPP

#include <vector>

#include "qent/algebra.hpp"

/**
 * @file coupling.hpp
 * @brief Compound states and the couplings they induce.
 *
 * A Coupling is stored as its compound density omega on G (x) H, with the
 * probe algebra A on the first factor and the system algebra B on the
 * second. The maps
 *
 *     pi(B)  = Tr_H[(I (x) B) omega]   (an operator on G)
 *     pi*(A) = Tr_G[(A (x) I) omega]   (an operator on H)
 *
 * are derived views; rho = pi(I) and sigma = pi*(I) are the marginals.
 */

namespace qent {

/// Amplitude operator upsilon: F -> G (x) H, stored as tensor[f][g][h].
class AmplitudeOperator {
 public:
  AmplitudeOperator(Index dF, Index dG, Index dH);
  /// A state vector psi in G (x) H (dF = 1).
  static AmplitudeOperator from_vector(const CVector& psi, Index dG, Index dH);

  [[nodiscard]] Index dF() const { return dF_; }
  [[nodiscard]] Index dG() const { return dG_; }
  [[nodiscard]] Index dH() const { return dH_; }

  Complex& operator()(Index f, Index g, Index h) { return data_[(f * dG_ + g) * dH_ + h]; }
  Complex operator()(Index f, Index g, Index h) const { return data_[(f * dG_ + g) * dH_ + h]; }

  /// The (dG*dH) x dF matrix of upsilon.
  [[nodiscard]] CMatrix matrix() const;
  /// Tr_F upsilon^dagger upsilon = sum |entries|^2.
  [[nodiscard]] double squared_norm() const;

 private:
  Index dF_, dG_, dH_;
  std::vector<Complex> data_;
};

class Coupling {
 public:
  /// Validates omega (PSD, unit trace within 1e-9, member of a (x) b).
  static Coupling from_density(const CMatrix& omega, const BlockShape& a, const BlockShape& b);

  [[nodiscard]] const BlockShape& shape_a() const { return shape_a_; }
  [[nodiscard]] const BlockShape& shape_b() const { return shape_b_; }
  [[nodiscard]] Index dim_a() const { return shape_a_.total_dim(); }
  [[nodiscard]] Index dim_b() const { return shape_b_.total_dim(); }
  [[nodiscard]] const CMatrix& omega() const { return omega_; }

  /// rho = Tr_H omega.
  [[nodiscard]] CMatrix rho() const;
  /// sigma = Tr_G omega.
  [[nodiscard]] CMatrix sigma() const;

  [[nodiscard]] AlgebraState state_a() const;
  [[nodiscard]] AlgebraState state_b() const;

  /// The same compound state with the two factors exchanged.
  [[nodiscard]] Coupling swapped() const;

 private:
  Coupling(BlockShape a, BlockShape b, CMatrix omega);

  BlockShape shape_a_;
  BlockShape shape_b_;
  CMatrix omega_;
};

/// Weighted family of states on a common algebra.
struct Ensemble {
  std::vector<double> weights;
  std::vector<AlgebraState> states;

  /// Checks weights are non-negative and sum to 1 within 1e-9, and that
  /// all states share one shape.
  void validate() const;
  [[nodiscard]] CMatrix average() const;
};

/// Weighted family of product states rho_n (x) sigma_n.
struct SeparableEnsemble {
  std::vector<double> weights;
  std::vector<AlgebraState> probe_states;   // rho_n on A
  std::vector<AlgebraState> system_states;  // sigma_n on B

  void validate() const;
};

/// omega = upsilon upsilon^dagger on simple algebras L(G), L(H).
[[nodiscard]] Coupling compound_from_amplitude(const AmplitudeOperator& v);

/// chi: G -> F (x) H with chi[(f,h), g] = upsilon[(g,h), f], returned as an
/// amplitude operator with input space G and outputs F (x) H.
[[nodiscard]] AmplitudeOperator amplitude_transpose(const AmplitudeOperator& v);

/// Standard self-coupling of a state, A = B. The compound density is
/// (+)_i p(i) |psi_i><psi_i| with psi_i the row-stacked vectorization of
/// tilde(sigma_i^{1/2}), so that sigma is the B-marginal and
/// pi*(A) = sigma^{1/2} tilde(A) sigma^{1/2}.
[[nodiscard]] Coupling standard_coupling(const AlgebraState& s);

/// omega = sum_n |n><n| (x) mu(n) sigma_n over an Abelian probe.
[[nodiscard]] Coupling diagonal_coupling(const Ensemble& e);

/// omega = sum_n mu(n) tilde(rho_n) (x) sigma_n. The tilde sits on the probe
/// factor; it is a no-op for real probe densities.
[[nodiscard]] Coupling separable_coupling(const SeparableEnsemble& e);

/// Product coupling rho (x) sigma.
[[nodiscard]] Coupling product_coupling(const AlgebraState& rho, const AlgebraState& sigma);

/// Algebra an operator argument belongs to.
enum class Factor { A, B };

/// pi(b) for b in B (Factor::B) or pi*(b) for b in A (Factor::A).
[[nodiscard]] CMatrix coupling_apply(const Coupling& c, const CMatrix& b, Factor side);

/// Operator-matrix lift of pi over the matrix units of each block of B,
/// assembled block-diagonally over the blocks. transposed = false gives
/// [pi(E_ik)], whose positivity is complete positivity; transposed = true
/// gives [tilde(pi(E_ik))], whose positivity is tilde-complete positivity.
[[nodiscard]] CMatrix choi_of_coupling(const Coupling& c, bool transposed);

struct Classification {
  bool tcp = false;
  bool cp = false;
  bool truly_quantum = false;
};

[[nodiscard]] Classification classify(const Coupling& c);

}  // namespace qent

#endif  // QENT_COUPLING_HPP
