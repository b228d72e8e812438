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

#include "core/wigner.hpp"

#include <bit>

#include "core/errors.hpp"

namespace paulilens {
namespace {

const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void require_qubits(int d) {
  if (d != 2) throw ArgumentError("phase-space methods are defined for qubits only");
}

// i^{sum s_i t_i}
Complex hermitian_phase(std::int64_t code) {
  const std::uint64_t c = static_cast<std::uint64_t>(code);
  const int st = std::popcount(c & (c >> 1) & 0x5555555555555555ull);
  return kIPow[st % 4];
}

// Exchanges s and t bits of every qubit.
std::int64_t swap_st(std::int64_t code) {
  const std::uint64_t c = static_cast<std::uint64_t>(code);
  return static_cast<std::int64_t>(((c & 0x5555555555555555ull) << 1) |
                                   ((c >> 1) & 0x5555555555555555ull));
}

void walsh_hadamard(Vector& v) {
  const std::int64_t size = v.size();
  for (std::int64_t len = 1; len < size; len <<= 1)
    for (std::int64_t i = 0; i < size; i += len << 1)
      for (std::int64_t j = i; j < i + len; ++j) {
        const Complex a = v[j], b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
}

}  // namespace

Vector hermitian_coefficients(const Operator& o) {
  require_qubits(o.d());
  Vector c = pauli_coefficients(o);
  for (Eigen::Index a = 0; a < c.size(); ++a) c[a] *= std::conj(hermitian_phase(a));
  return c;
}

Operator operator_from_hermitian_coefficients(const Vector& h, int n) {
  Vector c = h;
  for (Eigen::Index a = 0; a < c.size(); ++a) c[a] *= hermitian_phase(a);
  return operator_from_coefficients(c, 2, n);
}

Complex hermitian_product_phase(std::int64_t x, std::int64_t y, int n) {
  // sigma_x sigma_y = i^{k_x + k_y - k_z} X^{s}Z^{t}X^{s'}Z^{t'} / X^{s+s'}Z^{t+t'}
  // and X^s Z^t X^{s'} Z^{t'} = (-1)^{t.s'} X^{s+s'} Z^{t+t'}.
  const std::uint64_t ux = static_cast<std::uint64_t>(x), uy = static_cast<std::uint64_t>(y);
  const std::uint64_t mask = n >= 32 ? ~0ull : ((1ull << (2 * n)) - 1);
  if ((ux | uy) & ~mask) throw ArgumentError("label out of range");
  auto k = [](std::uint64_t c) {
    return std::popcount(c & (c >> 1) & 0x5555555555555555ull);
  };
  const std::uint64_t tx = (ux >> 1) & 0x5555555555555555ull;
  const std::uint64_t sy = uy & 0x5555555555555555ull;
  const int sign = std::popcount(tx & sy);
  const int power = k(ux) + k(uy) - k(ux ^ uy) + 2 * sign;
  return kIPow[((power % 4) + 4) % 4];
}

int symplectic_form(std::int64_t a, std::int64_t b) {
  return std::popcount(static_cast<std::uint64_t>(a & swap_st(b))) & 1;
}

Operator phase_point_operator(std::int64_t a, int n) {
  const std::int64_t count = pauli_count(2, n);
  Vector h(count);
  for (std::int64_t b = 0; b < count; ++b) h[b] = symplectic_form(a, b) ? -1.0 : 1.0;
  return operator_from_hermitian_coefficients(h, n);
}

WignerFunction wigner_function(const Operator& o) {
  const Vector h = hermitian_coefficients(o);
  Vector g(h.size());
  for (Eigen::Index b = 0; b < h.size(); ++b) g[swap_st(b)] = h[b];
  walsh_hadamard(g);
  return {o.n(), g};
}

Vector symplectic_ft(const WignerFunction& w) {
  Vector g = w.values;
  if (g.size() != pauli_count(2, w.n))
    throw ArgumentError("Wigner function has the wrong length");
  walsh_hadamard(g);
  Vector h(g.size());
  for (Eigen::Index b = 0; b < g.size(); ++b)
    h[b] = g[swap_st(b)] / static_cast<double>(g.size());
  return h;
}

Operator operator_from_wigner(const WignerFunction& w) {
  return operator_from_hermitian_coefficients(symplectic_ft(w), w.n);
}

Operator convolve(const Operator& o1, const Operator& o2) {
  if (!o1.same_shape(o2)) throw ArgumentError("operator shapes differ");
  WignerFunction w1 = wigner_function(o1);
  const WignerFunction w2 = wigner_function(o2);
  w1.values = w1.values.cwiseProduct(w2.values);
  return operator_from_wigner(w1);
}

}  // namespace paulilens
