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

#include "qent/matcore.hpp"
#include "support/random.hpp"

using namespace qent;
using qent::testing::Rng;

TEST_CASE("kron places the first factor on the slow index") {
  Rng rng(11);
  const CMatrix a = testing::ginibre(2, 3, rng);
  const CMatrix b = testing::ginibre(3, 2, rng);
  const CMatrix k = kron(a, b);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (Index g = 0; g < 2; ++g)
    for (Index gp = 0; gp < 3; ++gp)
      for (Index h = 0; h < 3; ++h)
        for (Index hp = 0; hp < 2; ++hp)
          CHECK(std::abs(k(g * 3 + h, gp * 2 + hp) - a(g, gp) * b(h, hp)) < 1e-14);
}

TEST_CASE("partial trace of a product") {
  Rng rng(12);
  const CMatrix a = testing::ginibre(2, 2, rng);
  const CMatrix b = testing::ginibre(3, 3, rng);
  const CMatrix k = kron(a, b);
  CHECK((partial_trace(k, {2, 3}, Keep::First) - b.trace() * a).norm() < 1e-12);
  CHECK((partial_trace(k, {2, 3}, Keep::Second) - a.trace() * b).norm() < 1e-12);
  CHECK_THROWS_AS((void)partial_trace(k, {2, 2}, Keep::First), InvalidInput);
}

TEST_CASE("herm_eig sorts descending and reconstructs") {
  Rng rng(13);
  const CMatrix m = testing::random_density(4, rng);
  const Spectrum s = herm_eig(m);
  for (Index i = 1; i < 4; ++i) CHECK(s.eigenvalues(i - 1) >= s.eigenvalues(i));
  const CMatrix back = s.eigenvectors * s.eigenvalues.cast<Complex>().asDiagonal() *
                       s.eigenvectors.adjoint();
  CHECK((back - m).norm() < 1e-12);
  CHECK(s.rank() == 4);
}

TEST_CASE("herm_eig rejects bad input") {
  CMatrix m(2, 2);
  m << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS((void)herm_eig(m), InvalidInput);
  CHECK_THROWS_AS((void)herm_eig(CMatrix::Zero(2, 3)), InvalidInput);
  CMatrix nan = CMatrix::Identity(2, 2);
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS((void)herm_eig(nan), InvalidInput);
}

TEST_CASE("spectral functions act on the support only") {
  CMatrix p = CMatrix::Zero(3, 3);
  p(0, 0) = 0.5;
  p(1, 1) = 0.5;
  const CMatrix l = log_support(p);
  CHECK(std::abs(l(0, 0).real() - std::log(0.5)) < 1e-14);
  CHECK(std::abs(l(2, 2)) < 1e-14);
  const CMatrix pinv = pinv_psd(p);
  CHECK(std::abs(pinv(1, 1).real() - 2.0) < 1e-12);
  CHECK(std::abs(pinv(2, 2)) < 1e-14);
  CHECK((support_projector(p) - (pinv * p)).norm() < 1e-12);
  CHECK(numerical_rank(p) == 2);
  CHECK(std::abs(eta(p).trace().real() - std::log(0.5)) < 1e-14);
}

TEST_CASE("sqrt and inverse sqrt of a full-rank density") {
  Rng rng(14);
  const CMatrix m = testing::random_density(3, rng);
  const CMatrix r = sqrt_psd(m);
  CHECK((r * r - m).norm() < 1e-12);
  CHECK((inv_sqrt_psd(m) * r - CMatrix::Identity(3, 3)).norm() < 1e-9);
}

TEST_CASE("spectral calculus rejects indefinite operators") {
  CMatrix m = CMatrix::Identity(2, 2);
  m(1, 1) = -0.5;
  CHECK_THROWS_AS((void)sqrt_psd(m), InvalidInput);
  CHECK_THROWS_AS(require_psd(m, "test"), InvalidInput);
  CHECK(min_eigenvalue(m) == doctest::Approx(-0.5));
}

TEST_CASE("tilde is the transpose and vec_rows stacks rows") {
  Rng rng(15);
  const CMatrix a = testing::ginibre(3, 3, rng);
  CHECK((tilde(a) - a.transpose()).norm() == 0.0);
  CHECK_THROWS_AS((void)tilde(CMatrix::Zero(2, 3)), InvalidInput);
  const CVector v = vec_rows(a);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) CHECK(v(i * 3 + j) == a(i, j));
}

TEST_CASE("eta_scalar") {
  CHECK(eta_scalar(0.0) == 0.0);
  CHECK(eta_scalar(1.0) == 0.0);
  CHECK(eta_scalar(0.5) == doctest::Approx(0.5 * std::log(0.5)));
}
