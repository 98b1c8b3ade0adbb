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

#include "qent/capacity.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <Eigen/QR>

#include "qent/optimize.hpp"

namespace qent {

namespace {

constexpr double kInitialStep = 0.5;
constexpr double kZeroEntropy = 1e-13;
// A later restart replaces the incumbent only when it is better by this much.
constexpr double kImprovement = 1e-12;
constexpr std::uint64_t kOuterSalt = 0x71656e74u;
constexpr std::uint64_t kInnerSalt = 0x64656370u;

std::mt19937_64 restart_rng(std::uint64_t seed, std::uint64_t salt, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(restart)};
  return std::mt19937_64(seq);
}

std::vector<double> gaussian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = dist(rng);
  return x;
}

double size_tol(const OptimizerConfig& cfg) { return std::sqrt(cfg.tol); }

// ---------------------------------------------------------------------------
// Input states: one complex lower-triangular L_i per block, sigma ~ (+) L_i L_i^dagger.

std::size_t state_param_count(const BlockShape& shape) {
  std::size_t n = 0;
  for (Index d : shape.dims()) n += static_cast<std::size_t>(d * (d + 1));
  return n;
}

std::vector<double> tracial_params(const BlockShape& shape) {
  std::vector<double> x;
  x.reserve(state_param_count(shape));
  for (Index d : shape.dims()) {
    for (Index r = 0; r < d; ++r) {
      for (Index c = 0; c <= r; ++c) {
        x.push_back(r == c ? 1.0 : 0.0);
        x.push_back(0.0);
      }
    }
  }
  return x;
}

AlgebraState decode_state(const std::vector<double>& x, const BlockShape& shape) {
  std::vector<CMatrix> blocks;
  blocks.reserve(shape.dims().size());
  std::size_t k = 0;
  double total = 0.0;
  for (Index d : shape.dims()) {
    CMatrix l = CMatrix::Zero(d, d);
    for (Index r = 0; r < d; ++r) {
      for (Index c = 0; c <= r; ++c) {
        l(r, c) = Complex(x[k], x[k + 1]);
        k += 2;
      }
    }
    blocks.push_back(l * l.adjoint());
    total += real_trace(blocks.back());
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw InvalidInput("decode_state: degenerate parameter vector");
  }
  for (auto& b : blocks) b /= total;
  return state_from_blocks(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Pure decompositions, block by block: the vectors of block i are the columns
// of V_r sqrt(Lambda_r) W_i with W_i = Q_i^dagger from a thin QR of Z_i.

struct BlockFrame {
  Index offset = 0;
  Index dim = 0;
  Index rank = 0;
  Index components = 0;
  CMatrix root;  // dim x rank, V_r sqrt(Lambda_r) of the unnormalized block
};

std::vector<BlockFrame> frames_of(const AlgebraState& s, const std::optional<Index>& m) {
  std::vector<BlockFrame> frames;
  for (Index i = 0; i < s.shape().num_blocks(); ++i) {
    if (!s.has_support(i)) continue;
    const Spectrum sp = herm_eig(s.block(i));
    BlockFrame f;
    f.offset = s.shape().offset(i);
    f.dim = s.shape().block_dim(i);
    f.rank = sp.rank();
    f.components = std::max(m.value_or(f.rank * f.rank), f.rank);
    f.root = sp.eigenvectors.leftCols(f.rank) *
             sp.eigenvalues.head(f.rank).cwiseSqrt().asDiagonal();
    frames.push_back(std::move(f));
  }
  return frames;
}

std::size_t decomposition_param_count(const std::vector<BlockFrame>& frames) {
  std::size_t n = 0;
  for (const auto& f : frames) {
    if (f.components > 1) n += static_cast<std::size_t>(2 * f.components * f.rank);
  }
  return n;
}

std::vector<double> eigenbasis_params(const std::vector<BlockFrame>& frames) {
  std::vector<double> x;
  for (const auto& f : frames) {
    if (f.components == 1) continue;
    for (Index r = 0; r < f.components; ++r) {
      for (Index c = 0; c < f.rank; ++c) {
        x.push_back(r == c ? 1.0 : 0.0);
        x.push_back(0.0);
      }
    }
  }
  return x;
}

// Unnormalized vectors sqrt(mu_n) psi_n embedded in C^D.
std::vector<CVector> decode_vectors(const std::vector<double>& x,
                                    const std::vector<BlockFrame>& frames, Index total_dim) {
  std::vector<CVector> out;
  std::size_t k = 0;
  for (const auto& f : frames) {
    CMatrix w;
    if (f.components == 1) {
      w = CMatrix::Identity(1, 1);
    } else {
      CMatrix z(f.components, f.rank);
      for (Index r = 0; r < f.components; ++r) {
        for (Index c = 0; c < f.rank; ++c) {
          z(r, c) = Complex(x[k], x[k + 1]);
          k += 2;
        }
      }
      Eigen::HouseholderQR<CMatrix> qr(z);
      const CMatrix q = qr.householderQ() * CMatrix::Identity(f.components, f.rank);
      w = q.adjoint();
    }
    const CMatrix cols = f.root * w;
    for (Index n = 0; n < f.components; ++n) {
      CVector v = CVector::Zero(total_dim);
      v.segment(f.offset, f.dim) = cols.col(n);
      out.push_back(std::move(v));
    }
  }
  return out;
}

double mean_output_entropy(const std::vector<CVector>& vectors, const Channel& ch) {
  double h = 0.0;
  for (const auto& v : vectors) {
    const double mu = v.squaredNorm();
    if (mu <= kSupportCutoff * kSupportCutoff) continue;
    h += mu * vn_entropy(ch.apply(v * v.adjoint() / mu));
  }
  return h;
}

PureDecomposition to_decomposition(const std::vector<CVector>& vectors) {
  PureDecomposition d;
  for (const auto& v : vectors) {
    const double mu = v.squaredNorm();
    if (mu <= kSupportCutoff * kSupportCutoff) continue;
    d.weights.push_back(mu);
    d.vectors.push_back(v / std::sqrt(mu));
  }
  return d;
}

void require_input(const AlgebraState& s1, const Channel& ch, const char* what) {
  if (!(s1.shape() == ch.shape_in())) {
    throw InvalidInput(std::string(what) + ": state lives on " + s1.shape().to_string() +
                       ", channel expects " + ch.shape_in().to_string());
  }
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1) throw InvalidInput("OptimizerConfig: restarts must be at least 1");
  if (inner_restarts < 1) throw InvalidInput("OptimizerConfig: inner_restarts must be at least 1");
  if (max_iters < 1) throw InvalidInput("OptimizerConfig: max_iters must be at least 1");
  if (!(tol > 0.0)) throw InvalidInput("OptimizerConfig: tol must be positive");
  if (ensemble_size && *ensemble_size < 1) {
    throw InvalidInput("OptimizerConfig: ensemble_size must be positive");
  }
}

CMatrix PureDecomposition::density() const {
  if (vectors.empty()) return CMatrix();
  const Index d = vectors.front().size();
  CMatrix m = CMatrix::Zero(d, d);
  for (std::size_t n = 0; n < vectors.size(); ++n) {
    m.noalias() += weights[n] * vectors[n] * vectors[n].adjoint();
  }
  return m;
}

double info_q(const AlgebraState& s1, const Channel& ch) {
  require_input(s1, ch, "info_q");
  return total_information(push_coupling(standard_coupling(s1), ch)).value;
}

MinEntropyResult min_output_mean_entropy(const AlgebraState& s1, const Channel& ch,
                                         const OptimizerConfig& cfg) {
  require_input(s1, ch, "min_output_mean_entropy");
  cfg.validate();
  const std::vector<BlockFrame> frames = frames_of(s1, cfg.ensemble_size);
  const std::size_t n = decomposition_param_count(frames);
  const Index dim = s1.dim();
  auto objective = [&](const std::vector<double>& x) {
    return mean_output_entropy(decode_vectors(x, frames, dim), ch);
  };

  MinEntropyResult best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<double> best_x;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::vector<double> x0;
    if (r == 0) {
      x0 = eigenbasis_params(frames);
    } else {
      auto rng = restart_rng(cfg.seed, kInnerSalt, r);
      x0 = gaussian(n, rng);
    }
    MinimizeResult res;
    const double start = objective(x0);
    if (n == 0 || start <= kZeroEntropy) {
      res.x = x0;
      res.value = start;
      res.converged = true;
    } else {
      res = nelder_mead(objective, x0, kInitialStep, cfg.max_iters, size_tol(cfg));
    }
    best.iterations_used += res.iterations;
    if (res.value < best.value - kImprovement) {
      best.value = res.value;
      best.converged = res.converged;
      best_x = res.x;
    }
    if (best.value <= kZeroEntropy) break;
  }
  best.value = std::max(best.value, 0.0);
  best.decomposition = to_decomposition(decode_vectors(best_x, frames, dim));
  return best;
}

double info_c(const AlgebraState& s1, const Channel& ch, const OptimizerConfig& cfg) {
  const MinEntropyResult inner = min_output_mean_entropy(s1, ch, cfg);
  return vn_entropy(apply_channel(ch, s1)) - inner.value;
}

double coherent_info(const AlgebraState& s1, const Channel& ch) {
  return info_q(s1, ch) - vn_entropy(apply_channel(ch, s1));
}

namespace {

// Maximizes f over input states; restart 0 starts from the tracial state.
template <typename F>
CapacityReport maximize_over_states(const BlockShape& shape, const OptimizerConfig& cfg,
                                    const F& f) {
  const std::size_t n = state_param_count(shape);
  auto objective = [&](const std::vector<double>& x) {
    try {
      return -f(decode_state(x, shape));
    } catch (const InvalidInput&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<double> best_x = tracial_params(shape);
  CapacityReport report{0.0, tracial_state(shape), std::nullopt, cfg.restarts, 0, false};
  for (int r = 0; r < cfg.restarts; ++r) {
    std::vector<double> x0;
    if (r == 0) {
      x0 = tracial_params(shape);
    } else {
      auto rng = restart_rng(cfg.seed, kOuterSalt, r);
      x0 = gaussian(n, rng);
    }
    const MinimizeResult res = nelder_mead(objective, x0, kInitialStep, cfg.max_iters,
                                           size_tol(cfg));
    report.iterations_used += res.iterations;
    if (-res.value > best_value + kImprovement) {
      best_value = -res.value;
      best_x = res.x;
      report.converged = res.converged;
    }
  }
  report.value = best_value;
  report.argmax_state = decode_state(best_x, shape);
  return report;
}

}  // namespace

CapacityReport capacity_q(const Channel& ch, const OptimizerConfig& cfg) {
  cfg.validate();
  return maximize_over_states(ch.shape_in(), cfg,
                              [&](const AlgebraState& s) { return info_q(s, ch); });
}

CapacityReport capacity_c(const Channel& ch, const OptimizerConfig& cfg) {
  cfg.validate();
  if (ch.dim_in() > kMaxClassicalCapacityDim) {
    throw DimensionGuard("capacity_c: input dimension " + std::to_string(ch.dim_in()) +
                         " exceeds the limit " + std::to_string(kMaxClassicalCapacityDim));
  }
  OptimizerConfig inner = cfg;
  inner.restarts = cfg.inner_restarts;
  CapacityReport report = maximize_over_states(
      ch.shape_in(), cfg, [&](const AlgebraState& s) { return info_c(s, ch, inner); });
  const MinEntropyResult at_best = min_output_mean_entropy(report.argmax_state, ch, inner);
  report.argmax_decomposition = at_best.decomposition;
  return report;
}

AdditivityResult additivity_check(const AlgebraState& s1, const Channel& ch, Index max_dim) {
  require_input(s1, ch, "additivity_check");
  if (!ch.shape_in().is_simple() || !ch.shape_out().is_simple()) {
    throw InvalidInput("additivity_check: needs simple input and output algebras");
  }
  const Index joint = ch.dim_in() * ch.dim_out();
  if (joint * joint > max_dim) {
    throw DimensionGuard("additivity_check: two-fold coupling dimension " +
                         std::to_string(joint * joint) + " exceeds " + std::to_string(max_dim));
  }
  AdditivityResult r;
  r.lhs = info_q(tensor_state(s1, s1), tensor_channel(ch, 2, max_dim));
  r.rhs = 2.0 * info_q(s1, ch);
  r.gap = std::abs(r.lhs - r.rhs);
  return r;
}

}  // namespace qent
