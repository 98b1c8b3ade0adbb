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

#include "qent/coupling.hpp"

#include <cmath>
#include <string>

namespace qent {

namespace {

constexpr double kNormTol = 1e-9;
constexpr double kChoiTol = 1e-9;

}  // namespace

AmplitudeOperator::AmplitudeOperator(Index dF, Index dG, Index dH)
    : dF_(dF), dG_(dG), dH_(dH) {
  if (dF <= 0 || dG <= 0 || dH <= 0) {
    throw InvalidInput("AmplitudeOperator: dimensions must be positive");
  }
  data_.assign(static_cast<std::size_t>(dF * dG * dH), Complex(0.0, 0.0));
}

AmplitudeOperator AmplitudeOperator::from_vector(const CVector& psi, Index dG, Index dH) {
  if (psi.size() != dG * dH) throw InvalidInput("AmplitudeOperator: vector length mismatch");
  AmplitudeOperator v(1, dG, dH);
  for (Index g = 0; g < dG; ++g) {
    for (Index h = 0; h < dH; ++h) v(0, g, h) = psi(g * dH + h);
  }
  return v;
}

CMatrix AmplitudeOperator::matrix() const {
  CMatrix m(dG_ * dH_, dF_);
  for (Index f = 0; f < dF_; ++f) {
    for (Index g = 0; g < dG_; ++g) {
      for (Index h = 0; h < dH_; ++h) m(g * dH_ + h, f) = (*this)(f, g, h);
    }
  }
  return m;
}

double AmplitudeOperator::squared_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return s;
}

Coupling::Coupling(BlockShape a, BlockShape b, CMatrix omega)
    : shape_a_(std::move(a)), shape_b_(std::move(b)), omega_(std::move(omega)) {}

Coupling Coupling::from_density(const CMatrix& omega, const BlockShape& a, const BlockShape& b) {
  const Index n = a.total_dim() * b.total_dim();
  if (omega.rows() != n || omega.cols() != n) {
    throw InvalidInput("Coupling: compound density dimension does not match " + a.to_string() +
                       " x " + b.to_string());
  }
  require_psd(omega, "Coupling");
  const double tr = real_trace(omega);
  if (std::abs(tr - 1.0) > kNormTol) {
    throw InvalidInput("Coupling: compound density trace " + std::to_string(tr) +
                       " differs from 1");
  }
  if (!is_product_member(omega, a, b)) {
    throw InvalidInput("Coupling: compound density is not a member of " + a.to_string() +
                       " x " + b.to_string());
  }
  CMatrix w = 0.5 * (omega + omega.adjoint());
  w /= tr;
  return Coupling(a, b, std::move(w));
}

CMatrix Coupling::rho() const { return partial_trace(omega_, {dim_a(), dim_b()}, Keep::First); }

CMatrix Coupling::sigma() const {
  return partial_trace(omega_, {dim_a(), dim_b()}, Keep::Second);
}

AlgebraState Coupling::state_a() const { return AlgebraState::from_density(rho(), shape_a_); }

AlgebraState Coupling::state_b() const { return AlgebraState::from_density(sigma(), shape_b_); }

Coupling Coupling::swapped() const {
  const Index da = dim_a();
  const Index db = dim_b();
  CMatrix out(da * db, da * db);
  for (Index a = 0; a < da; ++a) {
    for (Index b = 0; b < db; ++b) {
      for (Index a2 = 0; a2 < da; ++a2) {
        for (Index b2 = 0; b2 < db; ++b2) {
          out(b * da + a, b2 * da + a2) = omega_(a * db + b, a2 * db + b2);
        }
      }
    }
  }
  return Coupling(shape_b_, shape_a_, std::move(out));
}

void Ensemble::validate() const {
  if (weights.empty() || weights.size() != states.size()) {
    throw InvalidInput("Ensemble: weights and states must be non-empty and of equal length");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw InvalidInput("Ensemble: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > kNormTol) throw InvalidInput("Ensemble: weights do not sum to 1");
  for (const auto& s : states) {
    if (!(s.shape() == states.front().shape())) {
      throw InvalidInput("Ensemble: states live on different algebras");
    }
  }
}

CMatrix Ensemble::average() const {
  validate();
  CMatrix avg = CMatrix::Zero(states.front().dim(), states.front().dim());
  for (std::size_t n = 0; n < states.size(); ++n) avg += weights[n] * states[n].density();
  return avg;
}

void SeparableEnsemble::validate() const {
  Ensemble{weights, probe_states}.validate();
  Ensemble{weights, system_states}.validate();
}

Coupling compound_from_amplitude(const AmplitudeOperator& v) {
  if (std::abs(v.squared_norm() - 1.0) > kNormTol) {
    throw InvalidInput("compound_from_amplitude: amplitude operator is not normalized");
  }
  const CMatrix m = v.matrix();
  return Coupling::from_density(m * m.adjoint(), BlockShape::simple(v.dG()),
                                BlockShape::simple(v.dH()));
}

AmplitudeOperator amplitude_transpose(const AmplitudeOperator& v) {
  AmplitudeOperator chi(v.dG(), v.dF(), v.dH());
  for (Index f = 0; f < v.dF(); ++f) {
    for (Index g = 0; g < v.dG(); ++g) {
      for (Index h = 0; h < v.dH(); ++h) chi(g, f, h) = v(f, g, h);
    }
  }
  return chi;
}

Coupling standard_coupling(const AlgebraState& s) {
  const BlockShape& shape = s.shape();
  const Index n = shape.total_dim();
  CMatrix omega = CMatrix::Zero(n * n, n * n);
  for (Index i = 0; i < shape.num_blocks(); ++i) {
    if (!s.has_support(i)) continue;
    const Index o = shape.offset(i);
    const Index d = shape.block_dim(i);
    const CMatrix root = tilde(sqrt_psd(s.normalized_block(i)));
    // psi_i lives in H_i (x) H_i, embedded at rows (o+a) * n + (o+b).
    CVector psi = CVector::Zero(n * n);
    for (Index a = 0; a < d; ++a) {
      for (Index b = 0; b < d; ++b) psi((o + a) * n + (o + b)) = root(a, b);
    }
    omega += s.weight(i) * psi * psi.adjoint();
  }
  return Coupling::from_density(omega, shape, shape);
}

Coupling diagonal_coupling(const Ensemble& e) {
  e.validate();
  const Index k = static_cast<Index>(e.states.size());
  const Index d = e.states.front().dim();
  CMatrix omega = CMatrix::Zero(k * d, k * d);
  for (Index n = 0; n < k; ++n) {
    omega.block(n * d, n * d, d, d) = e.weights[n] * e.states[n].density();
  }
  return Coupling::from_density(omega, BlockShape::abelian(k), e.states.front().shape());
}

Coupling separable_coupling(const SeparableEnsemble& e) {
  e.validate();
  const Index da = e.probe_states.front().dim();
  const Index db = e.system_states.front().dim();
  CMatrix omega = CMatrix::Zero(da * db, da * db);
  for (std::size_t n = 0; n < e.weights.size(); ++n) {
    omega += e.weights[n] * kron(tilde(e.probe_states[n].density()), e.system_states[n].density());
  }
  return Coupling::from_density(omega, e.probe_states.front().shape(),
                                e.system_states.front().shape());
}

Coupling product_coupling(const AlgebraState& rho, const AlgebraState& sigma) {
  return Coupling::from_density(kron(rho.density(), sigma.density()), rho.shape(), sigma.shape());
}

CMatrix coupling_apply(const Coupling& c, const CMatrix& b, Factor side) {
  const Index da = c.dim_a();
  const Index db = c.dim_b();
  if (side == Factor::B) {
    if (b.rows() != db || b.cols() != db) {
      throw InvalidInput("coupling_apply: operator does not act on the B factor");
    }
    return partial_trace(kron(CMatrix::Identity(da, da), b) * c.omega(), {da, db}, Keep::First);
  }
  if (b.rows() != da || b.cols() != da) {
    throw InvalidInput("coupling_apply: operator does not act on the A factor");
  }
  return partial_trace(kron(b, CMatrix::Identity(db, db)) * c.omega(), {da, db}, Keep::Second);
}

CMatrix choi_of_coupling(const Coupling& c, bool transposed) {
  const BlockShape& shape = c.shape_b();
  const Index da = c.dim_a();
  Index total = 0;
  for (Index d : shape.dims()) total += d * da;
  CMatrix choi = CMatrix::Zero(total, total);
  Index base = 0;
  for (Index blk = 0; blk < shape.num_blocks(); ++blk) {
    const Index o = shape.offset(blk);
    const Index d = shape.block_dim(blk);
    for (Index i = 0; i < d; ++i) {
      for (Index k = 0; k < d; ++k) {
        CMatrix unit = CMatrix::Zero(c.dim_b(), c.dim_b());
        unit(o + i, o + k) = 1.0;
        CMatrix image = coupling_apply(c, unit, Factor::B);
        if (transposed) image = tilde(image);
        choi.block(base + i * da, base + k * da, da, da) = image;
      }
    }
    base += d * da;
  }
  return choi;
}

namespace {

bool lift_is_positive(const CMatrix& choi) {
  const Spectrum s = herm_eig(choi);
  const double scale = s.eigenvalues.cwiseAbs().maxCoeff();
  return s.eigenvalues(s.eigenvalues.size() - 1) >= -kChoiTol * scale;
}

}  // namespace

Classification classify(const Coupling& c) {
  Classification out;
  out.tcp = lift_is_positive(choi_of_coupling(c, true));
  out.cp = lift_is_positive(choi_of_coupling(c, false));
  out.truly_quantum = out.tcp && !out.cp;
  return out;
}

}  // namespace qent
