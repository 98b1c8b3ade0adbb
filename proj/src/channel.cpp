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

#include "qent/channel.hpp"

#include <string>

namespace qent {

namespace {

constexpr double kTraceTol = 1e-8;
constexpr double kIsometryTol = 1e-10;

}  // namespace

Channel::Channel(BlockShape in, BlockShape out, std::vector<CMatrix> kraus)
    : shape_in_(std::move(in)), shape_out_(std::move(out)), kraus_(std::move(kraus)) {}

CMatrix Channel::stinespring() const {
  const Index din = dim_in();
  const Index k = dilation_dim();
  CMatrix y(dim_out(), din * k);
  for (Index x = 0; x < din; ++x) {
    for (Index j = 0; j < k; ++j) y.col(x * k + j) = kraus_[j].col(x);
  }
  return y;
}

CMatrix Channel::apply(const CMatrix& density) const {
  if (density.rows() != dim_in() || density.cols() != dim_in()) {
    throw InvalidInput("Channel: input dimension does not match shape " + shape_in_.to_string());
  }
  CMatrix out = CMatrix::Zero(dim_out(), dim_out());
  for (const auto& k : kraus_) out.noalias() += k * density * k.adjoint();
  return pinch(out, shape_out_);
}

Channel channel_from_kraus(std::vector<CMatrix> kraus, BlockShape shape_in, BlockShape shape_out) {
  if (kraus.empty()) throw InvalidInput("channel_from_kraus: empty Kraus set");
  const Index din = shape_in.total_dim();
  const Index dout = shape_out.total_dim();
  CMatrix gram = CMatrix::Zero(din, din);
  for (const auto& k : kraus) {
    if (k.rows() != dout || k.cols() != din) {
      throw InvalidInput("channel_from_kraus: Kraus operator is " + std::to_string(k.rows()) +
                         "x" + std::to_string(k.cols()) + ", expected " + std::to_string(dout) +
                         "x" + std::to_string(din));
    }
    if (!all_finite(k)) throw InvalidInput("channel_from_kraus: non-finite Kraus entry");
    gram += k.adjoint() * k;
  }
  const double defect = (gram - CMatrix::Identity(din, din)).norm();
  if (defect > kTraceTol) {
    throw InvalidInput("channel_from_kraus: trace preservation violated (||sum K^dagger K - I|| = " +
                       std::to_string(defect) + ")");
  }
  return Channel(std::move(shape_in), std::move(shape_out), std::move(kraus));
}

Channel channel_from_kraus(std::vector<CMatrix> kraus) {
  if (kraus.empty()) throw InvalidInput("channel_from_kraus: empty Kraus set");
  BlockShape in = BlockShape::simple(kraus.front().cols());
  BlockShape out = BlockShape::simple(kraus.front().rows());
  return channel_from_kraus(std::move(kraus), std::move(in), std::move(out));
}

Channel channel_from_isometry(const CMatrix& y) {
  if (y.rows() < y.cols() || y.cols() == 0) {
    throw InvalidInput("channel_from_isometry: operator cannot be an isometry");
  }
  const CMatrix gram = y.adjoint() * y;
  if ((gram - CMatrix::Identity(y.cols(), y.cols())).norm() > kIsometryTol) {
    throw InvalidInput("channel_from_isometry: Y^dagger Y differs from the identity");
  }
  return channel_from_kraus({y});
}

AlgebraState apply_channel(const Channel& ch, const AlgebraState& s) {
  if (!(s.shape() == ch.shape_in())) {
    throw InvalidInput("apply_channel: state lives on " + s.shape().to_string() +
                       ", channel expects " + ch.shape_in().to_string());
  }
  return AlgebraState::from_density(ch.apply(s.density()), ch.shape_out());
}

CMatrix dual_channel(const Channel& ch, const CMatrix& b) {
  if (b.rows() != ch.dim_out() || b.cols() != ch.dim_out()) {
    throw InvalidInput("dual_channel: operator does not act on the output space");
  }
  CMatrix out = CMatrix::Zero(ch.dim_in(), ch.dim_in());
  for (const auto& k : ch.kraus()) out.noalias() += k.adjoint() * b * k;
  return out;
}

Coupling push_coupling(const Coupling& c, const Channel& ch) {
  if (!(c.shape_b() == ch.shape_in())) {
    throw InvalidInput("push_coupling: coupling B factor " + c.shape_b().to_string() +
                       " does not match channel input " + ch.shape_in().to_string());
  }
  const CMatrix id_a = CMatrix::Identity(c.dim_a(), c.dim_a());
  const Index n = c.dim_a() * ch.dim_out();
  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& k : ch.kraus()) {
    const CMatrix lifted = kron(id_a, k);
    out.noalias() += lifted * c.omega() * lifted.adjoint();
  }
  return Coupling::from_density(pinch_product(out, c.shape_a(), ch.shape_out()), c.shape_a(),
                                ch.shape_out());
}

Coupling push_probe(const Coupling& c, const Channel& ch) {
  if (!(c.shape_a() == ch.shape_in())) {
    throw InvalidInput("push_probe: coupling A factor " + c.shape_a().to_string() +
                       " does not match channel input " + ch.shape_in().to_string());
  }
  const CMatrix id_b = CMatrix::Identity(c.dim_b(), c.dim_b());
  const Index n = ch.dim_out() * c.dim_b();
  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& k : ch.kraus()) {
    const CMatrix lifted = kron(k, id_b);
    out.noalias() += lifted * c.omega() * lifted.adjoint();
  }
  return Coupling::from_density(pinch_product(out, ch.shape_out(), c.shape_b()), ch.shape_out(),
                                c.shape_b());
}

Channel tensor_channel(const Channel& ch, int n, Index max_dim) {
  if (n < 1) throw InvalidInput("tensor_channel: power must be at least 1");
  if (!ch.shape_in().is_simple() || !ch.shape_out().is_simple()) {
    throw InvalidInput("tensor_channel: tensor powers need simple input and output algebras");
  }
  Index din = 1;
  Index dout = 1;
  for (int i = 0; i < n; ++i) {
    din *= ch.dim_in();
    dout *= ch.dim_out();
    if (din > max_dim || dout > max_dim) {
      throw DimensionGuard("tensor_channel: embedded dimension exceeds " +
                           std::to_string(max_dim));
    }
  }
  std::vector<CMatrix> kraus = ch.kraus();
  for (int i = 1; i < n; ++i) {
    std::vector<CMatrix> next;
    next.reserve(kraus.size() * ch.kraus().size());
    for (const auto& a : kraus) {
      for (const auto& b : ch.kraus()) next.push_back(kron(a, b));
    }
    kraus = std::move(next);
  }
  return channel_from_kraus(std::move(kraus), BlockShape::simple(din), BlockShape::simple(dout));
}

CMatrix channel_choi(const Channel& ch) {
  const Index din = ch.dim_in();
  const Index dout = ch.dim_out();
  CMatrix choi = CMatrix::Zero(din * dout, din * dout);
  for (Index i = 0; i < din; ++i) {
    for (Index k = 0; k < din; ++k) {
      CMatrix unit = CMatrix::Zero(din, din);
      unit(i, k) = 1.0;
      choi.block(i * dout, k * dout, dout, dout) = ch.apply(unit);
    }
  }
  return choi;
}

}  // namespace qent
