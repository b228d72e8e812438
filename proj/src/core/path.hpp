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

#include <string>
#include <vector>

#include "core/tensor.hpp"

namespace paulilens {

struct PathTerm {
  std::vector<int> support;  // one or two qudits
  Operator h{2, 1};          // acts on `support`, traceless, ||h||_inf = 1
  double r = 0;
};

struct PathSegment {
  double duration = 0;
  std::vector<PathTerm> terms;
};

/// Piecewise-constant schedule H(s) = sum_j r_j(s) h_j.
struct CircuitPath {
  int d = 2;
  int n = 1;
  std::vector<PathSegment> segments;
  std::vector<std::string> warnings;
};

inline constexpr double kNormSlack = 1e-9;

/// Validates every term. Terms with ||h||_inf != 1 are rescaled (the factor
/// moves into r) with a warning, or rejected with ArgumentError when strict.
void validate_path(CircuitPath& path, bool strict);

/// Latest segment leftmost: U = prod_seg exp(-i ds sum_j r_j h_j). Each segment
/// is split into `substeps` equal factors, which is exact for constant segments.
Operator compile_unitary(const CircuitPath& path, int substeps = 1);

/// sum_seg ds * sum_j |r_j|.
double path_cost(const CircuitPath& path);

/// Hamiltonian of one segment on the full register.
Operator segment_hamiltonian(const CircuitPath& path, const PathSegment& seg);

}  // namespace paulilens
