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

#include "core/boolean.hpp"

#include <bit>
#include <cmath>

#include "core/errors.hpp"

namespace paulilens {

void check_boolean(const BooleanFunction& f) {
  if (f.n < 1 || f.n > 20) throw ArgumentError("Boolean function arity out of range");
  if (f.table.size() != (std::size_t{1} << f.n))
    throw ArgumentError("truth table must have 2^n entries");
  for (int v : f.table)
    if (v != 1 && v != -1) throw ArgumentError("truth table values must be +1 or -1");
}

std::vector<double> walsh_hadamard(const BooleanFunction& f) {
  check_boolean(f);
  std::vector<double> h(f.table.begin(), f.table.end());
  const std::size_t size = h.size();
  for (std::size_t len = 1; len < size; len <<= 1)
    for (std::size_t i = 0; i < size; i += len << 1)
      for (std::size_t j = i; j < i + len; ++j) {
        const double a = h[j], b = h[j + len];
        h[j] = a + b;
        h[j + len] = a - b;
      }
  for (double& v : h) v /= static_cast<double>(size);
  return h;
}

Operator boolean_embed(const BooleanFunction& f) {
  const auto hat = walsh_hadamard(f);
  const int n = f.n;
  Vector c = Vector::Zero(pauli_count(2, n));
  for (std::size_t mask = 0; mask < hat.size(); ++mask) {
    PauliIndex a{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    for (int i = 0; i < n; ++i) a.s[i] = (mask >> (n - 1 - i)) & 1u;
    c[encode_pauli(a, 2)] = hat[mask];
  }
  return operator_from_coefficients(c, 2, n);
}

double boolean_influence(const BooleanFunction& f) {
  const auto hat = walsh_hadamard(f);
  double acc = 0;
  for (std::size_t mask = 0; mask < hat.size(); ++mask)
    acc += hat[mask] * hat[mask] * std::popcount(mask);
  return acc;
}

double boolean_entropy(const BooleanFunction& f) {
  const auto hat = walsh_hadamard(f);
  double acc = 0;
  for (double v : hat)
    if (v != 0) acc -= v * v * std::log2(v * v);
  return acc;
}

}  // namespace paulilens
