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

#include <functional>

#include "core/tensor.hpp"

namespace paulilens {

/// f(A) for Hermitian A through its eigendecomposition.
Matrix hermitian_function(const Matrix& a, const std::function<double(double)>& f);

/// exp(-i t H) for Hermitian H.
Matrix expm_hermitian(const Matrix& h, double t);
Operator evolution(const Operator& h, double t);

/// -Tr(rho log2 rho) with 0 log 0 = 0.
double von_neumann_entropy(const Matrix& rho);

/// Shannon entropy in bits of a nonnegative vector, 0 log 0 = 0.
double shannon_entropy(const RealVector& p);

/// Eigenvalues of a Hermitian matrix in ascending order.
RealVector hermitian_eigenvalues(const Matrix& a);

}  // namespace paulilens
