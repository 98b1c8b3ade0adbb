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


#ifndef QENT_TESTS_SUPPORT_RANDOM_HPP
#define QENT_TESTS_SUPPORT_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "qent/capacity.hpp"

namespace qent::testing {

using Rng = std::mt19937_64;

CMatrix ginibre(Index rows, Index cols, Rng& rng);
CMatrix random_unitary(Index d, Rng& rng);
/// G G^dagger / Tr for a d x rank Ginibre G; full rank with probability 1
/// when rank == d.
CMatrix random_density(Index d, Rng& rng, Index rank = -1);
/// Random normalized vector.
CVector random_vector(Index d, Rng& rng);
/// Strictly positive probability vector.
std::vector<double> random_simplex(std::size_t n, Rng& rng);
/// Full-rank blocks with random block weights.
AlgebraState random_state(const BlockShape& shape, Rng& rng);
/// Kraus operators cut from a random isometry C^din -> C^(k*dout).
Channel random_channel(Index din, Index dout, Index nkraus, Rng& rng);
/// Random mixture of nkraus unitaries.
Channel random_unital_channel(Index d, Index nkraus, Rng& rng);
/// Identity channel on an algebra.
Channel identity_channel(const BlockShape& shape);
/// sigma -> I/d Tr sigma on a simple algebra.
Channel fully_depolarizing(Index d);
/// Pure compound state on C^dG (x) C^dH with the given Schmidt rank.
Coupling random_pure_compound(Index dG, Index dH, Index schmidt_rank, Rng& rng);

}  // namespace qent::testing

#endif  // QENT_TESTS_SUPPORT_RANDOM_HPP
