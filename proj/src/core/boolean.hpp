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

#include <vector>

#include "core/tensor.hpp"

namespace paulilens {

/// f : {-1,1}^n -> {-1,1}. table[x] holds f at the point whose i-th
/// coordinate is -1 iff bit (n-1-i) of x is set, so x_1 is the leading bit.
struct BooleanFunction {
  int n = 1;
  std::vector<int> table;
};

void check_boolean(const BooleanFunction& f);

/// Walsh-Hadamard coefficients hat f(S), S encoded like the table index.
std::vector<double> walsh_hadamard(const BooleanFunction& f);

/// sum_S hat f(S) X^S: Hermitian, squares to the identity.
Operator boolean_embed(const BooleanFunction& f);

double boolean_influence(const BooleanFunction& f);
double boolean_entropy(const BooleanFunction& f);

}  // namespace paulilens
