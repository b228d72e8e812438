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

#include "core/tensor.hpp"

namespace paulilens {

// Qubit phase space. Labels use the Pauli code, so bit 2i is s_i and bit
// 2i+1 is t_i. The Hermitian basis is sigma_a = i^{sum s_i t_i} X^s Z^t.

/// Coefficients h_a = <sigma_a, O>.
Vector hermitian_coefficients(const Operator& o);
Operator operator_from_hermitian_coefficients(const Vector& h, int n);

/// sigma_x sigma_y = phase(x, y) sigma_{x xor y}; the phase is in {1, i, -1, -i}.
Complex hermitian_product_phase(std::int64_t x, std::int64_t y, int n);

/// <a, b>_s = sum_i (s_i t'_i - t_i s'_i) mod 2.
int symplectic_form(std::int64_t a, std::int64_t b);

struct WignerFunction {
  int n = 1;
  Vector values;  // indexed by phase point label
};

/// A_a = sum_b sigma_b (-1)^{<a,b>_s}.
Operator phase_point_operator(std::int64_t a, int n);

/// f_O(a) = <A_a, O> = sum_b h_b (-1)^{<a,b>_s}.
WignerFunction wigner_function(const Operator& o);
/// hat O_b = E_a f(a) (-1)^{<a,b>_s}; returns Hermitian-basis coefficients.
Vector symplectic_ft(const WignerFunction& w);
/// Operator whose Wigner function is w.
Operator operator_from_wigner(const WignerFunction& w);

/// Operator whose Wigner function is f_{O1} f_{O2}.
Operator convolve(const Operator& o1, const Operator& o2);

}  // namespace paulilens
