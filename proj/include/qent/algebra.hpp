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

#ifndef QENT_ALGEBRA_HPP
#define QENT_ALGEBRA_HPP

#include <string>
#include <vector>

#include "qent/matcore.hpp"

namespace qent {

/// Block dimensions (d_1, ..., d_k) of a decomposable algebra
/// B = L(H_1) (+) ... (+) L(H_k), embedded in order into C^D, D = sum d_i.
class BlockShape {
 public:
  explicit BlockShape(std::vector<Index> dims);

  static BlockShape simple(Index d) { return BlockShape({d}); }
  static BlockShape abelian(Index n) { return BlockShape(std::vector<Index>(n, 1)); }

  [[nodiscard]] const std::vector<Index>& dims() const { return dims_; }
  [[nodiscard]] Index num_blocks() const { return static_cast<Index>(dims_.size()); }
  [[nodiscard]] Index block_dim(Index i) const { return dims_[i]; }
  [[nodiscard]] Index offset(Index i) const { return offsets_[i]; }
  [[nodiscard]] Index total_dim() const { return offsets_.back(); }
  /// Block index of a basis vector of C^D.
  [[nodiscard]] Index block_of(Index basis_index) const;

  [[nodiscard]] bool is_simple() const { return dims_.size() == 1; }
  [[nodiscard]] bool is_abelian() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BlockShape&, const BlockShape&) = default;

 private:
  std::vector<Index> dims_;
  std::vector<Index> offsets_;  // size k+1
};

/// rank B = sum d_i.
[[nodiscard]] Index algebra_rank(const BlockShape& shape);
/// dim B = sum d_i^2.
[[nodiscard]] Index algebra_dim(const BlockShape& shape);

/// Conditional expectation onto the block algebra: zeroes off-diagonal blocks.
[[nodiscard]] CMatrix pinch(const CMatrix& m, const BlockShape& shape);
/// Pinching onto the product algebra A (x) B acting on C^{D_A} (x) C^{D_B}.
[[nodiscard]] CMatrix pinch_product(const CMatrix& m, const BlockShape& a, const BlockShape& b);

[[nodiscard]] bool is_member(const CMatrix& m, const BlockShape& shape);
[[nodiscard]] bool is_product_member(const CMatrix& m, const BlockShape& a, const BlockShape& b);

/// A normal state on a decomposable algebra, held as its blocks sigma(i).
class AlgebraState {
 public:
  /// Validates a block-diagonal density on `shape` (PSD, unit trace within
  /// 1e-9, member of the algebra) and renormalizes it exactly.
  static AlgebraState from_density(const CMatrix& density, const BlockShape& shape);

  [[nodiscard]] const BlockShape& shape() const { return shape_; }
  [[nodiscard]] Index dim() const { return shape_.total_dim(); }
  [[nodiscard]] const std::vector<CMatrix>& blocks() const { return blocks_; }
  [[nodiscard]] const CMatrix& block(Index i) const { return blocks_[i]; }

  /// Center distribution p(i) = Tr sigma(i).
  [[nodiscard]] double weight(Index i) const;
  [[nodiscard]] std::vector<double> weights() const;
  /// True when p(i) exceeds kSupportCutoff.
  [[nodiscard]] bool has_support(Index i) const;
  /// sigma_i = sigma(i) / p(i); throws when p(i) is below the support cutoff.
  [[nodiscard]] CMatrix normalized_block(Index i) const;

  /// Full D x D block-diagonal density.
  [[nodiscard]] const CMatrix& density() const { return density_; }

 private:
  AlgebraState(BlockShape shape, std::vector<CMatrix> blocks);

  friend AlgebraState state_from_blocks(std::vector<CMatrix> blocks);

  BlockShape shape_;
  std::vector<CMatrix> blocks_;
  CMatrix density_;
};

/// Builds a state from its blocks; the shape is read off the block sizes.
[[nodiscard]] AlgebraState state_from_blocks(std::vector<CMatrix> blocks);

/// sigma = I_D / D.
[[nodiscard]] AlgebraState tracial_state(const BlockShape& shape);

/// Product state s (x) t on the tensor product of two simple algebras.
[[nodiscard]] AlgebraState tensor_state(const AlgebraState& s, const AlgebraState& t);

}  // namespace qent

#endif  // QENT_ALGEBRA_HPP
