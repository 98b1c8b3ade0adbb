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


#include <doctest.h>

#include <cmath>
#include <string>

#include "qent/channel.hpp"
#include "support/random.hpp"

using namespace qent;
using qent::testing::Rng;

TEST_CASE("Kraus sets must preserve the trace") {
  CMatrix k = CMatrix::Identity(2, 2);
  k(1, 1) = 0.5;
  try {
    (void)channel_from_kraus({k});
    FAIL("accepted a non trace-preserving Kraus set");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("trace preservation") != std::string::npos);
  }
  CHECK_THROWS_AS((void)channel_from_kraus({}), InvalidInput);
  CHECK_THROWS_AS((void)channel_from_kraus({CMatrix::Identity(2, 2), CMatrix::Zero(3, 2)}),
                  InvalidInput);
}

TEST_CASE("random channels preserve trace and positivity") {
  Rng rng(51);
  const Channel ch = testing::random_channel(2, 3, 3, rng);
  CHECK(ch.dim_in() == 2);
  CHECK(ch.dim_out() == 3);
  CHECK(ch.dilation_dim() == 3);
  const CMatrix rho = testing::random_density(2, rng);
  const CMatrix out = ch.apply(rho);
  CHECK(out.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(min_eigenvalue(out) > -1e-12);
}

TEST_CASE("Stinespring operator is an isometry reproducing the channel") {
  Rng rng(52);
  const Channel ch = testing::random_channel(2, 2, 3, rng);
  const CMatrix y = ch.stinespring();
  CHECK(y.rows() == 2);
  CHECK(y.cols() == 6);
  const CMatrix rho = testing::random_density(2, rng);
  // sum_j K_j rho K_j^dagger = Y (rho (x) I) Y^dagger
  const CMatrix via_y = y * kron(rho, CMatrix::Identity(3, 3)) * y.adjoint();
  CHECK((via_y - ch.apply(rho)).norm() < 1e-12);
}

TEST_CASE("isometric channels") {
  Rng rng(53);
  const CMatrix u = testing::random_unitary(3, rng);
  const CMatrix v = u.leftCols(2);
  const Channel ch = channel_from_isometry(v);
  const CMatrix rho = testing::random_density(2, rng);
  CHECK((ch.apply(rho) - v * rho * v.adjoint()).norm() < 1e-12);
  CHECK_THROWS_AS((void)channel_from_isometry(2.0 * v), InvalidInput);
  CHECK_THROWS_AS((void)channel_from_isometry(u.leftCols(2).transpose()), InvalidInput);
}

TEST_CASE("dual channel is the Heisenberg picture") {
  Rng rng(54);
  const Channel ch = testing::random_channel(3, 2, 2, rng);
  const CMatrix rho = testing::random_density(3, rng);
  const CMatrix b = testing::random_density(2, rng);
  const Complex lhs = (ch.apply(rho) * b).trace();
  const Complex rhs = (rho * dual_channel(ch, b)).trace();
  CHECK(std::abs(lhs - rhs) < 1e-12);
  CHECK((dual_channel(ch, CMatrix::Identity(2, 2)) - CMatrix::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("fully depolarizing channel") {
  Rng rng(55);
  const Channel ch = testing::fully_depolarizing(2);
  const AlgebraState s = testing::random_state(BlockShape::simple(2), rng);
  CHECK((apply_channel(ch, s).density() - 0.5 * CMatrix::Identity(2, 2)).norm() < 1e-12);
  CHECK_THROWS_AS((void)apply_channel(ch, tracial_state(BlockShape({1, 1}))), InvalidInput);
}

TEST_CASE("outputs are pinched onto the output algebra") {
  CMatrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  h /= std::sqrt(2.0);
  const Channel ch = channel_from_kraus({h}, BlockShape::simple(2), BlockShape::abelian(2));
  CMatrix zero = CMatrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  const CMatrix out = ch.apply(zero);
  CHECK((out - 0.5 * CMatrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("Choi matrix is positive with the identity as input marginal") {
  Rng rng(56);
  const Channel ch = testing::random_channel(2, 3, 2, rng);
  const CMatrix choi = channel_choi(ch);
  CHECK(min_eigenvalue(choi) > -1e-12);
  CHECK((partial_trace(choi, {2, 3}, Keep::First) - CMatrix::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("tensor powers") {
  Rng rng(57);
  const Channel ch = testing::random_channel(2, 2, 2, rng);
  const Channel ch2 = tensor_channel(ch, 2);
  CHECK(ch2.dilation_dim() == 4);
  const CMatrix a = testing::random_density(2, rng);
  const CMatrix b = testing::random_density(2, rng);
  CHECK((ch2.apply(kron(a, b)) - kron(ch.apply(a), ch.apply(b))).norm() < 1e-12);
  CHECK_THROWS_AS((void)tensor_channel(ch, 9), DimensionGuard);
  CHECK_THROWS_AS((void)tensor_channel(ch, 3, 4), DimensionGuard);
  CHECK_THROWS_AS((void)tensor_channel(ch, 0), InvalidInput);
  const Channel cl = testing::identity_channel(BlockShape({1, 1}));
  CHECK_THROWS_AS((void)tensor_channel(cl, 2), InvalidInput);
}

TEST_CASE("pushing couplings through channels") {
  Rng rng(58);
  const AlgebraState s = testing::random_state(BlockShape::simple(2), rng);
  const Coupling c = standard_coupling(s);
  const Channel ch = testing::random_channel(2, 3, 2, rng);
  const Coupling pushed = push_coupling(c, ch);
  CHECK(pushed.dim_b() == 3);
  CHECK((pushed.rho() - c.rho()).norm() < 1e-12);
  CHECK((pushed.sigma() - ch.apply(s.density())).norm() < 1e-12);

  const Coupling probed = push_probe(c, ch);
  CHECK(probed.dim_a() == 3);
  CHECK((probed.sigma() - c.sigma()).norm() < 1e-12);
  CHECK((probed.rho() - ch.apply(c.rho())).norm() < 1e-12);

  const Channel wrong = testing::random_channel(3, 2, 2, rng);
  CHECK_THROWS_AS((void)push_coupling(c, wrong), InvalidInput);
  CHECK_THROWS_AS((void)push_probe(c, wrong), InvalidInput);
}
