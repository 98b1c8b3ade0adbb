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

#include "qent/capacity.hpp"
#include "support/random.hpp"

using namespace qent;
using qent::testing::Rng;

namespace {

const double kLn2 = std::log(2.0);

CMatrix diag(const std::vector<double>& p) {
  CMatrix m = CMatrix::Zero(static_cast<Index>(p.size()), static_cast<Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) m(i, i) = p[i];
  return m;
}

double shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0) h -= x * std::log(x);
  return h;
}

using Stochastic = std::vector<std::vector<double>>;  // p[k][j] = P(j | k)

Channel classical_channel(const Stochastic& p) {
  const Index din = static_cast<Index>(p.size());
  const Index dout = static_cast<Index>(p.front().size());
  std::vector<CMatrix> kraus;
  for (Index k = 0; k < din; ++k) {
    for (Index j = 0; j < dout; ++j) {
      CMatrix m = CMatrix::Zero(dout, din);
      m(j, k) = std::sqrt(p[k][j]);
      kraus.push_back(m);
    }
  }
  return channel_from_kraus(std::move(kraus));
}

Channel amplitude_damping(double gamma) {
  CMatrix k0 = CMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  CMatrix k1 = CMatrix::Zero(2, 2);
  k1(0, 1) = std::sqrt(gamma);
  return channel_from_kraus({k0, k1});
}

OptimizerConfig quick() {
  OptimizerConfig cfg;
  cfg.restarts = 3;
  cfg.inner_restarts = 2;
  return cfg;
}

}  // namespace

TEST_CASE("info_q and coherent information of reference channels") {
  const BlockShape q = BlockShape::simple(2);
  const AlgebraState mixed = tracial_state(q);
  const Channel id = testing::identity_channel(q);
  const Channel dep = testing::fully_depolarizing(2);
  CHECK(info_q(mixed, id) == doctest::Approx(2 * kLn2).epsilon(1e-12));
  CHECK(coherent_info(mixed, id) == doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(coherent_info(mixed, dep) == doctest::Approx(-kLn2).epsilon(1e-12));

  const AlgebraState pure = AlgebraState::from_density(diag({1.0, 0.0}), q);
  CHECK(std::abs(info_q(pure, id)) < 1e-12);
  CHECK(std::abs(coherent_info(pure, id)) < 1e-12);

  Rng rng(61);
  for (int t = 0; t < 5; ++t) {
    const AlgebraState s = testing::random_state(q, rng);
    CHECK(std::abs(info_q(s, dep)) < 1e-9);
    CHECK(coherent_info(s, dep) <= info_q(s, dep));
  }
  CHECK_THROWS_AS((void)info_q(tracial_state(BlockShape::simple(3)), id), InvalidInput);
}

TEST_CASE("minimal mean output entropy of reference channels") {
  const BlockShape q = BlockShape::simple(2);
  Rng rng(62);
  const AlgebraState s = testing::random_state(q, rng);
  const MinEntropyResult noiseless = min_output_mean_entropy(s, testing::identity_channel(q), quick());
  CHECK(noiseless.value < 1e-12);
  CHECK(noiseless.converged);

  OptimizerConfig one = quick();
  one.restarts = 1;
  const MinEntropyResult dep = min_output_mean_entropy(s, testing::fully_depolarizing(2), one);
  CHECK(dep.value == doctest::Approx(kLn2).epsilon(1e-9));
}

TEST_CASE("decompositions reproduce the input state") {
  Rng rng(63);
  const Channel ch = testing::random_channel(2, 2, 2, rng);
  for (const auto& dims : {std::vector<Index>{2}, {1, 2}}) {
    const AlgebraState s = testing::random_state(BlockShape(dims), rng);
    const Channel local = dims.size() == 1 ? ch : testing::identity_channel(BlockShape(dims));
    const MinEntropyResult r = min_output_mean_entropy(s, local, quick());
    CHECK((r.decomposition.density() - s.density()).norm() < 1e-8);
    for (const auto& v : r.decomposition.vectors) CHECK(v.norm() == doctest::Approx(1.0));
    double total = 0.0;
    for (double w : r.decomposition.weights) total += w;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("classical channels are minimized by the eigenbasis ensemble") {
  const Stochastic p{{0.9, 0.1}, {0.3, 0.7}};
  const Channel ch = classical_channel(p);
  Rng rng(64);
  for (int t = 0; t < 3; ++t) {
    const auto w = testing::random_simplex(2, rng);
    const AlgebraState s = AlgebraState::from_density(diag(w), BlockShape::simple(2));
    // oracle: the eigenbasis ensemble
    const double oracle = w[0] * shannon(p[0]) + w[1] * shannon(p[1]);
    const MinEntropyResult r = min_output_mean_entropy(s, ch, quick());
    CHECK(r.value == doctest::Approx(oracle).epsilon(1e-6));
    const std::vector<double> out{w[0] * p[0][0] + w[1] * p[1][0], w[0] * p[0][1] + w[1] * p[1][1]};
    CHECK(info_c(s, ch, quick()) == doctest::Approx(shannon(out) - oracle).epsilon(1e-6));
  }
}

TEST_CASE("I_c lies between zero and I_q") {
  Rng rng(65);
  for (int t = 0; t < 4; ++t) {
    const Channel ch = testing::random_channel(2, 2, 2 + t % 2, rng);
    const AlgebraState s = testing::random_state(BlockShape::simple(2), rng);
    const double ic = info_c(s, ch, quick());
    CHECK(ic >= -1e-9);
    CHECK(ic <= info_q(s, ch) + 1e-6);
  }
}

TEST_CASE("noiseless capacities") {
  OptimizerConfig cfg;
  const CapacityReport cq = capacity_q(testing::identity_channel(BlockShape::simple(2)), cfg);
  CHECK(cq.value == doctest::Approx(std::log(4.0)).epsilon(1e-3));
  CHECK((cq.argmax_state.density() - 0.5 * CMatrix::Identity(2, 2)).norm() < 1e-2);
  CHECK(cq.restarts == 16);
  CHECK(cq.converged);
  // argmax reproduces the reported value
  CHECK(info_q(cq.argmax_state, testing::identity_channel(BlockShape::simple(2))) ==
        doctest::Approx(cq.value).epsilon(1e-12));

  const CapacityReport cc = capacity_c(testing::identity_channel(BlockShape::simple(2)), cfg);
  CHECK(cc.value == doctest::Approx(kLn2).epsilon(1e-3));
  REQUIRE(cc.argmax_decomposition.has_value());
  CHECK((cc.argmax_decomposition->density() - cc.argmax_state.density()).norm() < 1e-8);

  const CapacityReport cl = capacity_c(testing::identity_channel(BlockShape({1, 1})), cfg);
  CHECK(cl.value == doctest::Approx(kLn2).epsilon(1e-3));
  const CapacityReport ql = capacity_q(testing::identity_channel(BlockShape({1, 2})), cfg);
  CHECK(ql.value == doctest::Approx(std::log(5.0)).epsilon(1e-3));
}

TEST_CASE("depolarizing capacities vanish") {
  const Channel dep = testing::fully_depolarizing(2);
  OptimizerConfig cfg = quick();
  CHECK(std::abs(capacity_q(dep, cfg).value) < 1e-6);
  CHECK(std::abs(capacity_c(dep, cfg).value) < 1e-6);
}

TEST_CASE("capacity_q dominates sampled inputs of a non-unital channel") {
  const Channel ad = amplitude_damping(0.3);
  OptimizerConfig cfg = quick();
  const CapacityReport r = capacity_q(ad, cfg);
  CHECK(r.value >= info_q(tracial_state(BlockShape::simple(2)), ad) - 1e-9);
  Rng rng(66);
  for (int t = 0; t < 10; ++t) {
    CHECK(r.value >= info_q(testing::random_state(BlockShape::simple(2), rng), ad) - 1e-6);
  }
  CHECK(info_q(r.argmax_state, ad) == doctest::Approx(r.value).epsilon(1e-12));
}

TEST_CASE("capacity runs are reproducible") {
  Rng rng(67);
  const Channel ch = testing::random_channel(2, 2, 2, rng);
  const OptimizerConfig cfg = quick();
  const CapacityReport a = capacity_q(ch, cfg);
  const CapacityReport b = capacity_q(ch, cfg);
  CHECK(a.value == b.value);
  CHECK(a.iterations_used == b.iterations_used);
}

TEST_CASE("capacity_c refuses large inputs") {
  CHECK_THROWS_AS((void)capacity_c(testing::identity_channel(BlockShape::simple(5)), quick()),
                  DimensionGuard);
}

TEST_CASE("optimizer configuration is validated") {
  OptimizerConfig cfg;
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg = OptimizerConfig{};
  cfg.tol = 0.0;
  CHECK_THROWS_AS((void)capacity_q(testing::fully_depolarizing(2), cfg), InvalidInput);
}

TEST_CASE("additivity of I_q") {
  const BlockShape q = BlockShape::simple(2);
  const AdditivityResult id = additivity_check(tracial_state(q), testing::identity_channel(q));
  CHECK(id.lhs == doctest::Approx(4 * kLn2).epsilon(1e-12));
  CHECK(id.rhs == doctest::Approx(4 * kLn2).epsilon(1e-12));

  Rng rng(68);
  const AdditivityResult dep =
      additivity_check(testing::random_state(q, rng), testing::fully_depolarizing(2));
  CHECK(std::abs(dep.lhs) < 1e-9);
  CHECK(std::abs(dep.rhs) < 1e-9);

  const Channel ch = testing::random_channel(2, 2, 3, rng);
  CHECK(additivity_check(testing::random_state(q, rng), ch).gap <= 1e-6);

  CHECK_THROWS_AS((void)additivity_check(tracial_state(BlockShape::simple(5)),
                                         testing::identity_channel(BlockShape::simple(5))),
                  DimensionGuard);
  CHECK_THROWS_AS((void)additivity_check(tracial_state(BlockShape({1, 1})),
                                         testing::identity_channel(BlockShape({1, 1}))),
                  InvalidInput);
}

TEST_CASE("I_c is superadditive on product inputs") {
  const Stochastic p{{0.8, 0.2}, {0.25, 0.75}};
  const Channel ch = classical_channel(p);
  const AlgebraState s = AlgebraState::from_density(diag({0.35, 0.65}), BlockShape::simple(2));
  OptimizerConfig cfg = quick();
  cfg.restarts = 1;
  const double single = info_c(s, ch, cfg);
  const double joint = info_c(tensor_state(s, s), tensor_channel(ch, 2), cfg);
  CHECK(joint >= 2 * single - 1e-6);
}
