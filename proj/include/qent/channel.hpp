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

#ifndef QENT_CHANNEL_HPP
#define QENT_CHANNEL_HPP

#include <vector>

#include "qent/coupling.hpp"

namespace qent {

/// Default guard on the total embedded dimension of tensor powers.
inline constexpr Index kDefaultMaxDim = 256;

/// Trace-preserving CP map in Kraus form, K_j: H_in -> H_out.
///
/// States are pushed forward as sum_j K_j sigma K_j^dagger and then pinched
/// onto the output algebra. Pinching the input is the caller's job.
class Channel {
 public:
  [[nodiscard]] const BlockShape& shape_in() const { return shape_in_; }
  [[nodiscard]] const BlockShape& shape_out() const { return shape_out_; }
  [[nodiscard]] const std::vector<CMatrix>& kraus() const { return kraus_; }
  [[nodiscard]] Index dim_in() const { return shape_in_.total_dim(); }
  [[nodiscard]] Index dim_out() const { return shape_out_.total_dim(); }
  /// Dimension of the noise space of the Stinespring dilation.
  [[nodiscard]] Index dilation_dim() const { return static_cast<Index>(kraus_.size()); }

  /// The Stinespring operator Y: H_in (x) F+ -> H_out, Y(x (x) e_j) = K_j x.
  [[nodiscard]] CMatrix stinespring() const;

  /// Pinched pre-dual image of an arbitrary operator on H_in.
  [[nodiscard]] CMatrix apply(const CMatrix& density) const;

 private:
  Channel(BlockShape in, BlockShape out, std::vector<CMatrix> kraus);

  friend Channel channel_from_kraus(std::vector<CMatrix> kraus, BlockShape shape_in,
                                    BlockShape shape_out);

  BlockShape shape_in_;
  BlockShape shape_out_;
  std::vector<CMatrix> kraus_;
};

/// Rejects Kraus sets with || sum K^dagger K - I || > 1e-8.
[[nodiscard]] Channel channel_from_kraus(std::vector<CMatrix> kraus, BlockShape shape_in,
                                         BlockShape shape_out);
/// Simple-algebra shapes read off the Kraus dimensions.
[[nodiscard]] Channel channel_from_kraus(std::vector<CMatrix> kraus);

/// Noiseless channel sigma -> Y sigma Y^dagger for an isometry Y.
[[nodiscard]] Channel channel_from_isometry(const CMatrix& y);

[[nodiscard]] AlgebraState apply_channel(const Channel& ch, const AlgebraState& s);

/// Heisenberg picture: sum_j K_j^dagger b K_j.
[[nodiscard]] CMatrix dual_channel(const Channel& ch, const CMatrix& b);

/// (id (x) Lambda_*) omega: the channel acts on the B factor.
[[nodiscard]] Coupling push_coupling(const Coupling& c, const Channel& ch);

/// (Lambda_* (x) id) omega: the channel acts on the probe factor.
[[nodiscard]] Coupling push_probe(const Coupling& c, const Channel& ch);

/// n-fold tensor power; only simple input and output algebras are accepted.
[[nodiscard]] Channel tensor_channel(const Channel& ch, int n, Index max_dim = kDefaultMaxDim);

/// Choi matrix sum_ik E_ik (x) Lambda_*(E_ik) on H_in (x) H_out.
[[nodiscard]] CMatrix channel_choi(const Channel& ch);

}  // namespace qent

#endif  // QENT_CHANNEL_HPP
