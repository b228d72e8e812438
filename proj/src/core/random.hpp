// Copyright 2026 The pauli-lens Authors
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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "core/tensor.hpp"

namespace paulilens {

using Rng = std::mt19937_64;

/// Independent generator for one (seed, stream) pair.
Rng stream_rng(std::uint64_t seed, std::uint64_t stream);

/// i.i.d. standard complex Gaussian entries.
Matrix ginibre(std::int64_t rows, std::int64_t cols, Rng& rng);
Vector random_unit_vector(std::int64_t size, Rng& rng);

Operator haar_unitary(int d, int n, Rng& rng);
/// Gaussian-entry operator rescaled to unit l2 norm.
Operator random_unit_operator(int d, int n, Rng& rng);
Operator random_hermitian(int d, int n, Rng& rng);
/// Traceless Hermitian with unit operator norm.
Operator random_traceless_hermitian(int d, int n, Rng& rng);
Operator random_pure_state(int d, int n, Rng& rng);
/// Hilbert-Schmidt ensemble: G G^\dagger / Tr(G G^\dagger).
Operator random_density(int d, int n, Rng& rng);
/// Random single-qudit unitaries interleaved with random swaps.
Operator random_stable_unitary(int d, int n, Rng& rng, int layers = 3);
/// Random traceless Hermitian on `support`, unit operator norm, embedded.
Operator random_local_hamiltonian(int d, int n, const std::vector<int>& support,
                                  Rng& rng);

}  // namespace paulilens
