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

#include "core/random.hpp"

#include <algorithm>
#include <cmath>

#include "core/gates.hpp"

namespace paulilens {

Rng stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x5eedu};
  return Rng(seq);
}

Matrix ginibre(std::int64_t rows, std::int64_t cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (std::int64_t j = 0; j < cols; ++j)
    for (std::int64_t i = 0; i < rows; ++i) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

Vector random_unit_vector(std::int64_t size, Rng& rng) {
  Vector v = ginibre(size, 1, rng).col(0);
  return v / v.norm();
}

Operator haar_unitary(int d, int n, Rng& rng) {
  const std::int64_t dim = checked_dim(d, n);
  Eigen::HouseholderQR<Matrix> qr(ginibre(dim, dim, rng));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR();
  for (std::int64_t j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return Operator(d, n, std::move(q));
}

Operator random_unit_operator(int d, int n, Rng& rng) {
  const std::int64_t dim = checked_dim(d, n);
  Operator o(d, n, ginibre(dim, dim, rng));
  return o.scaled(1.0 / l2_norm(o));
}

Operator random_hermitian(int d, int n, Rng& rng) {
  const std::int64_t dim = checked_dim(d, n);
  const Matrix g = ginibre(dim, dim, rng);
  return Operator(d, n, (g + g.adjoint()) * 0.5);
}

Operator random_traceless_hermitian(int d, int n, Rng& rng) {
  Operator h = random_hermitian(d, n, rng);
  const Complex shift = h.trace() / static_cast<double>(h.dim());
  h = h - Operator::identity(d, n).scaled(shift);
  return h.scaled(1.0 / operator_norm(h));
}

Operator random_pure_state(int d, int n, Rng& rng) {
  const Vector psi = random_unit_vector(checked_dim(d, n), rng);
  return Operator(d, n, psi * psi.adjoint());
}

Operator random_density(int d, int n, Rng& rng) {
  const std::int64_t dim = checked_dim(d, n);
  const Matrix g = ginibre(dim, dim, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return Operator(d, n, (rho + rho.adjoint()) * 0.5);
}

Operator random_stable_unitary(int d, int n, Rng& rng, int layers) {
  Operator u = Operator::identity(d, n);
  std::uniform_int_distribution<int> site(0, std::max(0, n - 1));
  for (int layer = 0; layer < layers; ++layer) {
    for (int j = 0; j < n; ++j) u = embed(haar_unitary(d, 1, rng), {j}, n) * u;
    if (n >= 2) {
      int a = site(rng), b = site(rng);
      if (a == b) b = (a + 1) % n;
      u = named_gate("SWAP", {a, b}, d, n) * u;
    }
  }
  return u;
}

Operator random_local_hamiltonian(int d, int n, const std::vector<int>& support,
                                  Rng& rng) {
  const Operator h =
      random_traceless_hermitian(d, static_cast<int>(support.size()), rng);
  return embed(h, support, n);
}

}  // namespace paulilens
