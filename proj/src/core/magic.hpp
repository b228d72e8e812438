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

#include "core/search.hpp"
#include "core/sensitivity.hpp"
#include "core/tensor.hpp"

namespace paulilens {

/// max over weight-one Paulis P of H[U P U^\dagger].
double magic_entropy(const Operator& u);

/// Lower bound on sup_O |H[U O U^\dagger] - H[O]| over unit-norm O, searched
/// on the traceless coefficient sphere. exact is set for Clifford U (value 0)
/// and when the value reaches the ceiling log2(d^{2n} - 1).
SearchResult magic_power_search(const Operator& u, int restarts = 64,
                                std::uint64_t seed = 0);

/// d/dt H[e^{-itH} O e^{itH}] at t = 0, i.e. -sum_a (dP_a/dt) log2 P_a.
double magic_rate(const Operator& h, const Operator& o);

/// |rate| against 8 d^k ||H||_inf log2(e) / e; H must act on at most k qudits.
RateBound magic_rate_bound_check(const Operator& h, const Operator& o, int k);

}  // namespace paulilens
