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
#include <vector>

#include "core/linear_map.hpp"

namespace paulilens {

struct SearchOptions {
  int restarts = 64;
  std::uint64_t seed = 0;
  int max_iterations = 1500;
  /// Coordinates pinned to zero (e.g. the identity label).
  std::vector<std::int64_t> frozen;
};

/// Best point found by a nonconvex search. value is |objective(witness)|,
/// a lower bound on the true supremum.
struct SearchResult {
  double value = 0;
  Vector witness;
  int restarts_used = 0;
  bool converged = false;
  bool exact = false;
};

/// Shannon entropy of |x|^2 / ||x||^2 in bits.
double entropy_of_amplitudes(const Vector& x);

/// H(|A c|^2) - H(|c|^2) for a unit vector c and unitary A.
double entropy_change(const LinearMap& a, const Vector& c);

/// Maximizes |H(|A c|^2) - H(|c|^2)| over unit vectors c.
///
/// Every standard basis vector is scored exactly. Riemannian gradient ascent
/// with backtracking line search then runs, for both signs of the objective,
/// from the `restarts` best basis vectors and from `restarts` Haar-random
/// starts. Restart i draws from its own stream, so the result does not depend
/// on the thread count.
SearchResult maximize_entropy_change(const LinearMap& a, const SearchOptions& opts);

}  // namespace paulilens
