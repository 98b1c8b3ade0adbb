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

#ifndef QENT_CAPACITY_HPP
#define QENT_CAPACITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qent/channel.hpp"
#include "qent/infomeasure.hpp"

namespace qent {

/// Largest input dimension accepted by capacity_c.
inline constexpr Index kMaxClassicalCapacityDim = 4;

struct OptimizerConfig {
  int restarts = 16;
  int max_iters = 2000;
  double tol = 1e-7;
  std::uint64_t seed = 1;
  /// Restarts of the inner decomposition search inside capacity_c.
  int inner_restarts = 4;
  /// Components per block in a pure decomposition; rank^2 when unset.
  std::optional<Index> ensemble_size;

  /// Throws InvalidInput unless restarts >= 1, max_iters >= 1 and tol > 0.
  void validate() const;
};

/// sigma = sum_n weights[n] |vectors[n]><vectors[n]| with unit vectors.
struct PureDecomposition {
  std::vector<double> weights;
  std::vector<CVector> vectors;

  [[nodiscard]] std::size_t size() const { return weights.size(); }
  [[nodiscard]] CMatrix density() const;
};

struct MinEntropyResult {
  double value = 0.0;
  PureDecomposition decomposition;
  int iterations_used = 0;
  bool converged = false;
};

struct CapacityReport {
  double value = 0.0;
  AlgebraState argmax_state;
  /// Optimal decomposition of argmax_state (capacity_c only).
  std::optional<PureDecomposition> argmax_decomposition;
  int restarts = 0;
  int iterations_used = 0;
  bool converged = false;
};

struct AdditivityResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

/// S(output) + E of the standard coupling pushed through ch.
[[nodiscard]] double info_q(const AlgebraState& s1, const Channel& ch);

/// Minimal mean output entropy over pure decompositions of s1.
[[nodiscard]] MinEntropyResult min_output_mean_entropy(const AlgebraState& s1, const Channel& ch,
                                                       const OptimizerConfig& cfg);

[[nodiscard]] double info_c(const AlgebraState& s1, const Channel& ch, const OptimizerConfig& cfg);

/// info_q minus the output entropy.
[[nodiscard]] double coherent_info(const AlgebraState& s1, const Channel& ch);

[[nodiscard]] CapacityReport capacity_q(const Channel& ch, const OptimizerConfig& cfg);

/// Throws DimensionGuard when the input dimension exceeds
/// kMaxClassicalCapacityDim.
[[nodiscard]] CapacityReport capacity_c(const Channel& ch, const OptimizerConfig& cfg);

/// Compares info_q of the two-fold tensor power against twice the single use.
[[nodiscard]] AdditivityResult additivity_check(const AlgebraState& s1, const Channel& ch,
                                                Index max_dim = kDefaultMaxDim);

}  // namespace qent

#endif  // QENT_CAPACITY_HPP
