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

#ifndef QENT_OPTIMIZE_HPP
#define QENT_OPTIMIZE_HPP

#include <functional>
#include <vector>

namespace qent {

using Objective = std::function<double(const std::vector<double>&)>;

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free simplex minimization (GSL nmsimplex2). Stops when the
/// simplex characteristic size drops below size_tol, when the best value
/// stalls for 20 iterations per dimension, or after max_iters.
/// Non-finite objective values are treated as +huge.
[[nodiscard]] MinimizeResult nelder_mead(const Objective& f, std::vector<double> x0, double step,
                                         int max_iters, double size_tol);

}  // namespace qent

#endif  // QENT_OPTIMIZE_HPP
