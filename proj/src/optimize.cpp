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

#include "qent/optimize.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

namespace qent {

namespace {

constexpr double kHuge = 1e300;
// Stall stop: iterations per dimension without a change in the best value.
constexpr int kStallPerDim = 20;
constexpr double kStallRelTol = 1e-13;

struct Trampoline {
  const Objective* f;
  std::vector<double> scratch;
};

double call(const gsl_vector* v, void* params) {
  auto* t = static_cast<Trampoline*>(params);
  for (std::size_t i = 0; i < v->size; ++i) t->scratch[i] = gsl_vector_get(v, i);
  const double y = (*t->f)(t->scratch);
  return std::isfinite(y) ? y : kHuge;
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

MinimizeResult nelder_mead(const Objective& f, std::vector<double> x0, double step, int max_iters,
                           double size_tol) {
  MinimizeResult out;
  if (x0.empty()) {
    out.value = f(x0);
    out.converged = true;
    return out;
  }
  gsl_set_error_handler_off();
  const std::size_t n = x0.size();
  Trampoline t{&f, std::vector<double>(n)};
  gsl_multimin_function fn{&call, n, &t};

  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(n));
  std::unique_ptr<gsl_vector, VectorDeleter> steps(gsl_vector_alloc(n));
  for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x.get(), i, x0[i]);
  gsl_vector_set_all(steps.get(), step);

  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> m(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
  if (!m) throw std::bad_alloc();
  gsl_multimin_fminimizer_set(m.get(), &fn, x.get(), steps.get());

  const int stall_window = kStallPerDim * static_cast<int>(n + 1);
  double best_value = std::numeric_limits<double>::infinity();
  int since_improvement = 0;
  int iter = 0;
  int stepped = 0;
  while (iter < max_iters) {
    ++iter;
    if (gsl_multimin_fminimizer_iterate(m.get()) != GSL_SUCCESS) break;
    ++stepped;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m.get()), size_tol) == GSL_SUCCESS) {
      out.converged = true;
      break;
    }
    const double now = gsl_multimin_fminimizer_minimum(m.get());
    if (!std::isfinite(best_value) ||
        best_value - now > kStallRelTol * (1.0 + std::abs(best_value))) {
      best_value = now;
      since_improvement = 0;
    } else if (++since_improvement >= stall_window) {
      out.converged = true;
      break;
    }
  }
  out.iterations = iter;
  if (stepped == 0) {
    out.x = std::move(x0);
    out.value = f(out.x);
    return out;
  }
  out.value = gsl_multimin_fminimizer_minimum(m.get());
  const gsl_vector* best = gsl_multimin_fminimizer_x(m.get());
  out.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.x[i] = gsl_vector_get(best, i);
  return out;
}

}  // namespace qent
