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


#include "random.hpp"

#include <cmath>

#include <Eigen/QR>

namespace qent::testing {

CMatrix ginibre(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMatrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) g(i, j) = Complex(n(rng), n(rng));
  }
  return g;
}

CMatrix random_unitary(Index d, Rng& rng) {
  const CMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    const Complex z = r(j, j);
    if (std::abs(z) > 0.0) q.col(j) *= z / std::abs(z);
  }
  return q;
}

CMatrix random_density(Index d, Rng& rng, Index rank) {
  if (rank < 0) rank = d;
  const CMatrix g = ginibre(d, rank, rng);
  CMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return 0.5 * (m + m.adjoint());
}

CVector random_vector(Index d, Rng& rng) {
  CVector v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

std::vector<double> random_simplex(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(n);
  double s = 0.0;
  for (auto& x : p) {
    x = e(rng) + 1e-3;
    s += x;
  }
  for (auto& x : p) x /= s;
  return p;
}

AlgebraState random_state(const BlockShape& shape, Rng& rng) {
  const auto p = random_simplex(shape.dims().size(), rng);
  std::vector<CMatrix> blocks;
  for (std::size_t i = 0; i < p.size(); ++i) {
    blocks.push_back(p[i] * random_density(shape.dims()[i], rng));
  }
  return state_from_blocks(std::move(blocks));
}

Channel random_channel(Index din, Index dout, Index nkraus, Rng& rng) {
  const CMatrix g = ginibre(nkraus * dout, din, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  const CMatrix v = qr.householderQ() * CMatrix::Identity(nkraus * dout, din);
  std::vector<CMatrix> kraus;
  for (Index j = 0; j < nkraus; ++j) kraus.push_back(v.middleRows(j * dout, dout));
  return channel_from_kraus(std::move(kraus));
}

Channel random_unital_channel(Index d, Index nkraus, Rng& rng) {
  const auto p = random_simplex(static_cast<std::size_t>(nkraus), rng);
  std::vector<CMatrix> kraus;
  for (double w : p) kraus.push_back(std::sqrt(w) * random_unitary(d, rng));
  return channel_from_kraus(std::move(kraus));
}

Channel identity_channel(const BlockShape& shape) {
  const Index d = shape.total_dim();
  return channel_from_kraus({CMatrix::Identity(d, d)}, shape, shape);
}

Channel fully_depolarizing(Index d) {
  std::vector<CMatrix> kraus;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      CMatrix k = CMatrix::Zero(d, d);
      k(i, j) = 1.0 / std::sqrt(static_cast<double>(d));
      kraus.push_back(k);
    }
  }
  return channel_from_kraus(std::move(kraus));
}

Coupling random_pure_compound(Index dG, Index dH, Index schmidt_rank, Rng& rng) {
  const CMatrix u = random_unitary(dG, rng);
  const CMatrix v = random_unitary(dH, rng);
  const auto lam = random_simplex(static_cast<std::size_t>(schmidt_rank), rng);
  CVector psi = CVector::Zero(dG * dH);
  for (Index k = 0; k < schmidt_rank; ++k) {
    psi += std::sqrt(lam[k]) * kron(u.col(k), v.col(k));
  }
  psi /= psi.norm();
  return compound_from_amplitude(AmplitudeOperator::from_vector(psi, dG, dH));
}

}  // namespace qent::testing
