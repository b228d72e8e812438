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

#include "core/gaussian.hpp"

#include <bit>
#include <cmath>

#include "core/errors.hpp"
#include "core/linalg.hpp"
#include "core/spectrum.hpp"

namespace paulilens {
namespace {

const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void require_qubits(const Operator& o) {
  if (o.d() != 2) throw ArgumentError("Gaussian machinery is defined for qubits only");
}

// Pauli string i^phase X^x Z^z over qubit bitmasks (bit j = qubit j).
struct Symplectic {
  std::uint64_t x = 0, z = 0;
  int phase = 0;
};

Symplectic gamma_symplectic(int i) {
  const int k = i / 2;
  Symplectic g;
  g.z = (std::uint64_t{1} << k) - 1;
  g.x = std::uint64_t{1} << k;
  if (i % 2 == 1) {
    g.z |= std::uint64_t{1} << k;
    g.phase = 1;  // Y = i X Z
  }
  return g;
}

std::int64_t symplectic_code(const Symplectic& p, int n) {
  std::int64_t code = 0;
  for (int j = n - 1; j >= 0; --j)
    code = code * 4 + ((p.x >> j) & 1u) + 2 * ((p.z >> j) & 1u);
  return code;
}

std::vector<MonomialLabel> monomial_table(int n) {
  const std::int64_t count = pauli_count(2, n);
  std::vector<MonomialLabel> table(count);
  for (std::int64_t s = 0; s < count; ++s) table[s] = monomial_label(n, s);
  return table;
}

}  // namespace

GammaBasis gamma_basis(int n) {
  if (n < 1) throw ArgumentError("gamma basis needs n >= 1");
  checked_dim(2, n);
  GammaBasis b;
  b.n = n;
  for (int i = 0; i < 2 * n; ++i) {
    const MonomialLabel l = monomial_label(n, GammaSubset{1} << i);
    b.gammas.push_back(pauli_op(l.code, 2, n).scaled(l.phase));
  }
  const Operator id = Operator::identity(2, n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i; j < 2 * n; ++j) {
      const Operator anti = b.gammas[i] * b.gammas[j] + b.gammas[j] * b.gammas[i];
      const Operator expect = i == j ? id.scaled(2.0) : Operator(2, n);
      if ((anti - expect).matrix().cwiseAbs().maxCoeff() > 1e-10)
        throw Error("gamma basis failed the anticommutation check");
    }
  return b;
}

Operator gamma_monomial(const GammaBasis& b, GammaSubset s) {
  Operator out = Operator::identity(2, b.n);
  for (int i = 0; i < 2 * b.n; ++i)
    if ((s >> i) & 1u) out = out * b.gammas[i];
  if (2 * b.n < 64 && (s >> (2 * b.n)) != 0)
    throw ArgumentError("gamma subset exceeds 2n generators");
  return out;
}

MonomialLabel monomial_label(int n, GammaSubset s) {
  if (n < 64 && 2 * n < 64 && (s >> (2 * n)) != 0)
    throw ArgumentError("gamma subset exceeds 2n generators");
  Symplectic acc;
  for (int i = 0; i < 2 * n; ++i) {
    if (!((s >> i) & 1u)) continue;
    const Symplectic g = gamma_symplectic(i);
    // (X^x1 Z^z1)(X^x2 Z^z2) = (-1)^{z1.x2} X^{x1+x2} Z^{z1+z2}
    acc.phase = (acc.phase + g.phase + 2 * std::popcount(acc.z & g.x)) % 4;
    acc.x ^= g.x;
    acc.z ^= g.z;
  }
  return {symplectic_code(acc, n), kIPow[acc.phase]};
}

GammaSubset subset_of_label(int n, std::int64_t code) {
  // Triangular in Jordan-Wigner order: peel the highest qubit first.
  GammaSubset s = 0;
  std::uint64_t x = 0, z = 0;
  for (int j = 0; j < n; ++j) {
    const int pair = static_cast<int>((code >> (2 * j)) & 3);
    x |= std::uint64_t(pair & 1) << j;
    z |= std::uint64_t(pair >> 1) << j;
  }
  for (int k = n - 1; k >= 0; --k) {
    const bool xk = (x >> k) & 1u, zk = (z >> k) & 1u;
    // gamma_{2k} contributes X_k, gamma_{2k+1} contributes X_k Z_k, both with
    // Z strings below k; their product gamma_{2k} gamma_{2k+1} is -i Z_k.
    int pick = 0;  // bit0: gamma_{2k}, bit1: gamma_{2k+1}
    if (xk && !zk) pick = 1;
    else if (xk && zk) pick = 2;
    else if (!xk && zk) pick = 3;
    for (int b = 0; b < 2; ++b) {
      if (!((pick >> b) & 1)) continue;
      const Symplectic g = gamma_symplectic(2 * k + b);
      x ^= g.x;
      z ^= g.z;
      s |= GammaSubset{1} << (2 * k + b);
    }
  }
  return s;
}

GaussianSpectrum gaussian_spectrum(const Operator& o) {
  require_qubits(o);
  require_unit_norm(o);
  const int n = o.n();
  const Vector c = pauli_coefficients(o);
  const auto table = monomial_table(n);
  GaussianSpectrum g;
  g.n = n;
  g.coeffs.resize(c.size());
  for (std::int64_t s = 0; s < c.size(); ++s)
    g.coeffs[s] = std::conj(table[s].phase) * c[table[s].code];
  g.probs = g.coeffs.cwiseAbs2();
  g.probs /= g.probs.sum();
  return g;
}

double gaussian_influence(const GaussianSpectrum& s) {
  double acc = 0;
  for (Eigen::Index i = 0; i < s.probs.size(); ++i)
    acc += std::popcount(static_cast<std::uint64_t>(i)) * s.probs[i];
  return acc;
}

std::vector<int> gaussian_weights(int n) {
  const auto table = monomial_table(n);
  std::vector<int> w(table.size());
  for (std::size_t s = 0; s < table.size(); ++s)
    w[table[s].code] = std::popcount(static_cast<std::uint64_t>(s));
  return w;
}

Operator carlen_lieb_apply(const Operator& o, double t) {
  require_qubits(o);
  if (!(t >= 0)) throw ArgumentError("semigroup time must be non-negative");
  Vector c = pauli_coefficients(o);
  const auto w = gaussian_weights(o.n());
  for (Eigen::Index a = 0; a < c.size(); ++a) c[a] *= std::exp(-t * w[a]);
  return operator_from_coefficients(c, 2, o.n());
}

TransitionMatrix gaussian_transition_matrix(const Operator& u) {
  require_qubits(u);
  const TransitionMatrix pauli = transition_matrix(u);
  const auto table = monomial_table(u.n());
  TransitionMatrix g = pauli;
  g.basis = Basis::kGamma;
  const std::int64_t count = pauli.entries.rows();
  for (std::int64_t sa = 0; sa < count; ++sa)
    for (std::int64_t sb = 0; sb < count; ++sb)
      g.entries(sb, sa) = std::conj(table[sb].phase) * table[sa].phase *
                          pauli.entries(table[sb].code, table[sa].code);
  return g;
}

SensitivityReport gaussian_circuit_sensitivity(const Operator& u, EigenMethod method) {
  require_qubits(u);
  require_unitary(u);
  const int n = u.n();
  const std::int64_t count = pauli_count(2, n);
  const auto weights = gaussian_weights(n);
  // W^G and T^G are W^G-in-Pauli-labels and T conjugated by the same unitary
  // (phase times permutation), so the spectrum is computed in the Pauli basis.
  SensitivityReport r;
  if (method == EigenMethod::kDense ||
      (method == EigenMethod::kAuto && count <= kDenseEigenLimit))
    r = quadratic_form_sensitivity(LinearMap::dense(transition_matrix(u).entries),
                                   weights, EigenMethod::kDense);
  else
    r = quadratic_form_sensitivity(heisenberg_map(u), weights,
                                   EigenMethod::kPowerIteration);
  const auto table = monomial_table(n);
  Vector gamma_witness(count);
  for (std::int64_t s = 0; s < count; ++s)
    gamma_witness[s] = std::conj(table[s].phase) * r.witness[table[s].code];
  r.witness = gamma_witness;
  return r;
}

bool is_matchgate(const Operator& u, double tol) {
  require_qubits(u);
  require_unitary(u);
  const int n = u.n();
  const auto weights = gaussian_weights(n);
  const GammaBasis b = gamma_basis(n);
  const Operator ud = u.adjoint();
  for (const Operator& g : b.gammas)
    for (const Operator* v : {&u, &ud}) {
      const Vector c = pauli_coefficients(conjugate_by(*v, g));
      for (Eigen::Index a = 0; a < c.size(); ++a)
        if (weights[a] != 1 && std::abs(c[a]) >= tol) return false;
    }
  return true;
}

Operator random_quadratic_hamiltonian(int n, Rng& rng) {
  const GammaBasis b = gamma_basis(n);
  std::normal_distribution<double> g(0.0, 1.0);
  Operator h(2, n);
  for (int j = 0; j < 2 * n; ++j)
    for (int k = j + 1; k < 2 * n; ++k)
      h = h + (b.gammas[j] * b.gammas[k]).scaled(Complex(0, g(rng)));
  return Operator(2, n, (h.matrix() + h.matrix().adjoint()) * 0.5);
}

Operator random_matchgate(int n, Rng& rng) {
  return evolution(random_quadratic_hamiltonian(n, rng), 1.0);
}

}  // namespace paulilens
