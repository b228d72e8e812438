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

/// A square linear map on coefficient vectors given either densely or by its
/// action. `adjoint` must apply the conjugate transpose.
struct LinearMap {
  std::int64_t size = 0;
  std::function<Vector(const Vector&)> apply;
  std::function<Vector(const Vector&)> adjoint;

  static LinearMap dense(Matrix m);
};

/// Coefficient-space action of O -> U O U^\dagger in the Pauli basis,
/// evaluated without materializing the transition matrix.
LinearMap heisenberg_map(const Operator& u);

}  // namespace paulilens
