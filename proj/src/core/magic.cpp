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

#include "core/magic.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "core/errors.hpp"
#include "core/spectrum.hpp"

namespace paulilens {

double magic_entropy(const Operator& u) {
  require_unitary(u);
  double best = 0;
  for (std::int64_t label : weight_one_labels(u.d(), u.n())) {
    const Operator p = conjugate_by(u, pauli_op(label, u.d(), u.n()));
    best = std::max(best, fourier_entropy(pauli_spectrum(p)));
  }
  return best;
}

SearchResult magic_power_search(const Operator& u, int restarts, std::uint64_t seed) {
  require_unitary(u);
  const std::int64_t size = pauli_count(u.d(), u.n());
  if (is_clifford(u)) {
    SearchResult r;
    r.value = 0;
    r.witness = Vector::Zero(size);
    r.witness[size > 1 ? 1 : 0] = 1;
    r.converged = true;
    r.exact = true;
    return r;
  }
  SearchOptions opts;
  opts.restarts = restarts;
  opts.seed = seed;
  opts.frozen = {0};
  const LinearMap t = size <= kDenseEigenLimit
                          ? LinearMap::dense(transition_matrix(u).entries)
                          : heisenberg_map(u);
  SearchResult r = maximize_entropy_change(t, opts);
  r.exact = r.value >= std::log2(static_cast<double>(size - 1)) - 1e-9;
  return r;
}

double magic_rate(const Operator& h, const Operator& o) {
  if (!h.is_hermitian(1e-9)) throw ArgumentError("Hamiltonian must be Hermitian");
  require_unit_norm(o);
  const Vector c = pauli_coefficients(o);
  const Vector dc = pauli_coefficients(commutator(o, h).scaled(Complex(0, 1)));
  const double norm2 = c.squaredNorm();
  double acc = 0;
  for (Eigen::Index a = 0; a < c.size(); ++a) {
    const double p = std::norm(c[a]) / norm2;
    if (p <= 0) continue;
    const double dp = 2.0 * (std::conj(c[a]) * dc[a]).real() / norm2;
    acc -= dp * std::log2(p);
  }
  return acc;
}

RateBound magic_rate_bound_check(const Operator& h, const Operator& o, int k) {
  if (k < 0) throw ArgumentError("support size must be non-negative");
  const SubsetMask support = support_of(h);
  if (std::popcount(support) > k)
    throw SupportError("Hamiltonian acts on more than k = " + std::to_string(k) +
                       " qudits");
  RateBound r;
  r.rate = magic_rate(h, o);
  r.bound = 8.0 * std::pow(double(h.d()), k) * operator_norm(h) *
            std::numbers::log2e / std::numbers::e;
  r.satisfied = std::abs(r.rate) <= r.bound + 1e-9;
  return r;
}

}  // namespace paulilens
