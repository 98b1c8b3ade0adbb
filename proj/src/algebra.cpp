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

#include "qent/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qent {

namespace {

constexpr double kTraceTol = 1e-9;
constexpr double kMemberTol = 1e-10;

}  // namespace

BlockShape::BlockShape(std::vector<Index> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw InvalidInput("BlockShape: at least one block is required");
  offsets_.reserve(dims_.size() + 1);
  offsets_.push_back(0);
  for (Index d : dims_) {
    if (d <= 0) throw InvalidInput("BlockShape: block dimensions must be positive");
    offsets_.push_back(offsets_.back() + d);
  }
}

Index BlockShape::block_of(Index basis_index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), basis_index);
  return static_cast<Index>(it - offsets_.begin()) - 1;
}

bool BlockShape::is_abelian() const {
  return std::all_of(dims_.begin(), dims_.end(), [](Index d) { return d == 1; });
}

std::string BlockShape::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
  os << ')';
  return os.str();
}

Index algebra_rank(const BlockShape& shape) {
  return std::accumulate(shape.dims().begin(), shape.dims().end(), Index{0});
}

Index algebra_dim(const BlockShape& shape) {
  Index total = 0;
  for (Index d : shape.dims()) total += d * d;
  return total;
}

CMatrix pinch(const CMatrix& m, const BlockShape& shape) {
  const Index n = shape.total_dim();
  if (m.rows() != n || m.cols() != n) {
    throw InvalidInput("pinch: matrix dimension does not match shape " + shape.to_string());
  }
  CMatrix out = CMatrix::Zero(n, n);
  for (Index i = 0; i < shape.num_blocks(); ++i) {
    const Index o = shape.offset(i);
    const Index d = shape.block_dim(i);
    out.block(o, o, d, d) = m.block(o, o, d, d);
  }
  return out;
}

CMatrix pinch_product(const CMatrix& m, const BlockShape& a, const BlockShape& b) {
  const Index da = a.total_dim();
  const Index db = b.total_dim();
  if (m.rows() != da * db || m.cols() != da * db) {
    throw InvalidInput("pinch_product: matrix dimension does not match " + a.to_string() +
                       " x " + b.to_string());
  }
  CMatrix out = CMatrix::Zero(da * db, da * db);
  for (Index r = 0; r < da * db; ++r) {
    const Index ra = a.block_of(r / db);
    const Index rb = b.block_of(r % db);
    for (Index c = 0; c < da * db; ++c) {
      if (a.block_of(c / db) == ra && b.block_of(c % db) == rb) out(r, c) = m(r, c);
    }
  }
  return out;
}

bool is_member(const CMatrix& m, const BlockShape& shape) {
  if (m.rows() != shape.total_dim() || m.cols() != shape.total_dim()) return false;
  return (m - pinch(m, shape)).norm() <= kMemberTol * m.norm();
}

bool is_product_member(const CMatrix& m, const BlockShape& a, const BlockShape& b) {
  const Index n = a.total_dim() * b.total_dim();
  if (m.rows() != n || m.cols() != n) return false;
  return (m - pinch_product(m, a, b)).norm() <= kMemberTol * m.norm();
}

AlgebraState::AlgebraState(BlockShape shape, std::vector<CMatrix> blocks)
    : shape_(std::move(shape)), blocks_(std::move(blocks)) {
  const Index n = shape_.total_dim();
  density_ = CMatrix::Zero(n, n);
  for (Index i = 0; i < shape_.num_blocks(); ++i) {
    const Index o = shape_.offset(i);
    const Index d = shape_.block_dim(i);
    density_.block(o, o, d, d) = blocks_[i];
  }
}

AlgebraState state_from_blocks(std::vector<CMatrix> blocks) {
  if (blocks.empty()) throw InvalidInput("state_from_blocks: no blocks given");
  std::vector<Index> dims;
  double total = 0.0;
  for (auto& b : blocks) {
    require_psd(b, "state_from_blocks");
    b = (0.5 * (b + b.adjoint())).eval();
    dims.push_back(b.rows());
    total += real_trace(b);
  }
  if (!(total > 0.0)) throw InvalidInput("state_from_blocks: total trace is zero");
  if (std::abs(total - 1.0) > kTraceTol) {
    throw InvalidInput("state_from_blocks: total trace " + std::to_string(total) +
                       " differs from 1 beyond 1e-9");
  }
  for (auto& b : blocks) b /= total;
  return AlgebraState(BlockShape(std::move(dims)), std::move(blocks));
}

AlgebraState AlgebraState::from_density(const CMatrix& density, const BlockShape& shape) {
  if (density.rows() != shape.total_dim() || density.cols() != shape.total_dim()) {
    throw InvalidInput("AlgebraState: density dimension does not match shape " +
                       shape.to_string());
  }
  if (!is_member(density, shape)) {
    throw InvalidInput("AlgebraState: density is not a member of the algebra " +
                       shape.to_string());
  }
  std::vector<CMatrix> blocks;
  for (Index i = 0; i < shape.num_blocks(); ++i) {
    const Index o = shape.offset(i);
    const Index d = shape.block_dim(i);
    blocks.emplace_back(density.block(o, o, d, d));
  }
  return state_from_blocks(std::move(blocks));
}

double AlgebraState::weight(Index i) const { return real_trace(blocks_[i]); }

std::vector<double> AlgebraState::weights() const {
  std::vector<double> p;
  for (Index i = 0; i < shape_.num_blocks(); ++i) p.push_back(weight(i));
  return p;
}

bool AlgebraState::has_support(Index i) const { return weight(i) > kSupportCutoff; }

CMatrix AlgebraState::normalized_block(Index i) const {
  if (!has_support(i)) {
    throw InvalidInput("AlgebraState: block " + std::to_string(i) + " has zero weight");
  }
  return blocks_[i] / weight(i);
}

AlgebraState tracial_state(const BlockShape& shape) {
  const double d = static_cast<double>(shape.total_dim());
  std::vector<CMatrix> blocks;
  for (Index b : shape.dims()) blocks.emplace_back(CMatrix::Identity(b, b) / d);
  return state_from_blocks(std::move(blocks));
}

AlgebraState tensor_state(const AlgebraState& s, const AlgebraState& t) {
  if (!s.shape().is_simple() || !t.shape().is_simple()) {
    throw InvalidInput("tensor_state: only simple algebras are supported");
  }
  return state_from_blocks({kron(s.density(), t.density())});
}

}  // namespace qent
