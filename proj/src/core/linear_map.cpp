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

#include "core/linear_map.hpp"

#include <memory>

namespace paulilens {

LinearMap LinearMap::dense(Matrix m) {
  auto shared = std::make_shared<const Matrix>(std::move(m));
  LinearMap map;
  map.size = shared->rows();
  map.apply = [shared](const Vector& c) -> Vector { return *shared * c; };
  map.adjoint = [shared](const Vector& c) -> Vector {
    return shared->adjoint() * c;
  };
  return map;
}

LinearMap heisenberg_map(const Operator& u) {
  auto shared = std::make_shared<const Operator>(u);
  LinearMap map;
  map.size = u.dim() * u.dim();
  map.apply = [shared](const Vector& c) -> Vector {
    const Operator o = operator_from_coefficients(c, shared->d(), shared->n());
    return pauli_coefficients(conjugate_by(*shared, o));
  };
  map.adjoint = [shared](const Vector& c) -> Vector {
    const Operator o = operator_from_coefficients(c, shared->d(), shared->n());
    return pauli_coefficients(conjugate_by(shared->adjoint(), o));
  };
  return map;
}

}  // namespace paulilens
