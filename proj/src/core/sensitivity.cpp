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

#include "core/sensitivity.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/random.hpp"
#include "core/spectrum.hpp"

namespace paulilens {
namespace {

constexpr int kMaxPowerIterations = 200000;

Matrix materialize(const LinearMap& t) {
  Matrix m(t.size, t.size);
  parallel_for(static_cast<int>(t.size), [&](int a) {
    Vector e = Vector::Zero(t.size);
    e[a] = 1;
    m.col(a) = t.apply(e);
  });
  return m;
}

SensitivityReport dense_sensitivity(const Matrix& t, const std::vector<int>& weights) {
  const std::int64_t size = t.rows();
  RealVector w(size);
  for (std::int64_t a = 0; a < size; ++a) w[a] = weights[a];
  Matrix m = t.adjoint() * w.asDiagonal() * t;
  m.diagonal() -= w.cast<Complex>();
  m = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success)
    throw ConvergenceError("sensitivity eigensolver did not converge");
  const RealVector& ev = es.eigenvalues();
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < ev.size(); ++i)
    if (std::abs(ev[i]) > std::abs(ev[best])) best = i;
  SensitivityReport r;
  r.eigenvalue = ev[best];
  r.value = std::abs(ev[best]);
  r.witness = es.eigenvectors().col(best);
  r.iterations = 1;
  const double gap = 1e-8 * std::max(1.0, r.value);
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (i != best && std::abs(ev[i]) >= r.value - gap && r.value > gap)
      r.degenerate = true;
  return r;
}

// Power iteration on M^2 followed by separation of the +lambda and -lambda
// eigenspaces: if v = x+ + x- then v + Mv/lambda = 2 x+ and v - Mv/lambda = 2 x-.
SensitivityReport iterative_sensitivity(const LinearMap& t,
                                        const std::vector<int>& weights) {
  const std::int64_t size = t.size;
  RealVector w(size);
  for (std::int64_t a = 0; a < size; ++a) w[a] = weights[a];
  auto apply_m = [&](const Vector& c) -> Vector {
    Vector tc = t.apply(c);
    tc = w.cast<Complex>().cwiseProduct(tc);
    return t.adjoint(tc) - w.cast<Complex>().cwiseProduct(c);
  };
  Rng rng = stream_rng(0x51ce5, 0);
  Vector v = random_unit_vector(size, rng);
  SensitivityReport r;
  double lambda2 = 0;
  bool converged = false;
  for (int it = 1; it <= kMaxPowerIterations; ++it) {
    const Vector y = apply_m(apply_m(v));
    lambda2 = y.norm();
    r.iterations = it;
    if (lambda2 < 1e-28) {
      converged = true;
      lambda2 = 0;
      break;
    }
    const double residual = (y - v.dot(y) * v).norm();
    v = y / lambda2;
    if (residual <= 1e-11 * lambda2) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw ConvergenceError("power iteration for the sensitivity form did not converge");
  if (lambda2 == 0) {
    r.witness = v;
    return r;
  }
  const double lambda = std::sqrt(lambda2);
  const Vector mv = apply_m(v) / lambda;
  Vector plus = v + mv, minus = v - mv;
  const double np = plus.norm(), nm = minus.norm();
  r.degenerate = std::min(np, nm) > 1e-3;
  Vector x = np >= nm ? Vector(plus / np) : Vector(minus / nm);
  const double q = x.dot(apply_m(x)).real();
  r.eigenvalue = q;
  r.value = std::abs(q);
  r.witness = x;
  return r;
}

}  // namespace

void require_unitary(const Operator& u, double tol) {
  if (!u.is_unitary(tol)) throw ArgumentError("operator is not unitary");
}

TransitionMatrix transition_matrix(const Operator& u) {
  require_unitary(u);
  const int d = u.d(), n = u.n();
  const std::int64_t count = pauli_count(d, n);
  TransitionMatrix tm;
  tm.d = d;
  tm.n = n;
  tm.basis = Basis::kPauli;
  tm.entries.resize(count, count);
  parallel_for(static_cast<int>(count), [&](int a) {
    tm.entries.col(a) = pauli_coefficients(conjugate_by(u, pauli_op(a, d, n)));
  });
  return tm;
}

SensitivityReport quadratic_form_sensitivity(const LinearMap& t,
                                             const std::vector<int>& weights,
                                             EigenMethod method) {
  if (static_cast<std::int64_t>(weights.size()) != t.size)
    throw ArgumentError("weight vector length differs from the map size");
  if (method == EigenMethod::kAuto)
    method = t.size <= kDenseEigenLimit ? EigenMethod::kDense
                                        : EigenMethod::kPowerIteration;
  if (method == EigenMethod::kDense) return dense_sensitivity(materialize(t), weights);
  return iterative_sensitivity(t, weights);
}

SensitivityReport circuit_sensitivity(const Operator& u, EigenMethod method) {
  require_unitary(u);
  const auto weights = pauli_weights(u.d(), u.n());
  const std::int64_t size = pauli_count(u.d(), u.n());
  if (method == EigenMethod::kDense ||
      (method == EigenMethod::kAuto && size <= kDenseEigenLimit))
    return dense_sensitivity(transition_matrix(u).entries, weights);
  return iterative_sensitivity(heisenberg_map(u), weights);
}

double influence_change(const Operator& u, const Operator& o) {
  require_unitary(u);
  return influence_total(pauli_spectrum(conjugate_by(u, o))) -
         influence_total(pauli_spectrum(o));
}

double influence_rate(const Operator& h, const Operator& o) {
  if (!h.is_hermitian(1e-9)) throw ArgumentError("Hamiltonian must be Hermitian");
  require_unit_norm(o);
  const Vector c = pauli_coefficients(o);
  // dO/dt = -i[H, O] = i[O, H] for O(t) = e^{-itH} O e^{itH}.
  const Vector dc = pauli_coefficients(commutator(o, h).scaled(Complex(0, 1)));
  const auto weights = pauli_weights(o.d(), o.n());
  double acc = 0;
  for (Eigen::Index a = 0; a < c.size(); ++a)
    acc += weights[a] * 2.0 * (std::conj(c[a]) * dc[a]).real();
  return acc / c.squaredNorm();
}

RateBound influence_rate_bound_check(const Operator& h, const Operator& o, int k) {
  if (k < 0) throw ArgumentError("support size must be non-negative");
  const SubsetMask support = support_of(h);
  if (std::popcount(support) > k)
    throw SupportError("Hamiltonian acts on " + std::to_string(std::popcount(support)) +
                       " qudits, more than k = " + std::to_string(k));
  RateBound r;
  r.rate = influence_rate(h, o);
  r.bound = 4.0 * k * operator_norm(h);
  r.satisfied = std::abs(r.rate) <= r.bound + 1e-9;
  return r;
}

std::vector<std::int64_t> weight_one_labels(int d, int n) {
  std::vector<std::int64_t> out;
  for (int j = 0; j < n; ++j)
    for (int s = 0; s < d; ++s)
      for (int t = 0; t < d; ++t) {
        if (s == 0 && t == 0) continue;
        PauliIndex a{std::vector<int>(n, 0), std::vector<int>(n, 0)};
        a.s[j] = s;
        a.t[j] = t;
        out.push_back(encode_pauli(a, d));
      }
  return out;
}

bool is_stable(const Operator& u, double tol) {
  require_unitary(u);
  const int d = u.d(), n = u.n();
  const auto weights = pauli_weights(d, n);
  const Operator ud = u.adjoint();
  for (std::int64_t label : weight_one_labels(d, n)) {
    const Operator p = pauli_op(label, d, n);
    for (const Operator* v : {&u, &ud}) {
      const Vector c = pauli_coefficients(conjugate_by(*v, p));
      for (Eigen::Index a = 0; a < c.size(); ++a)
        if (weights[a] != 1 && std::abs(c[a]) >= tol) return false;
    }
  }
  return true;
}

bool is_clifford(const Operator& u, double tol) {
  require_unitary(u);
  const int d = u.d(), n = u.n();
  for (int j = 0; j < n; ++j)
    for (int which = 0; which < 2; ++which) {
      PauliIndex a{std::vector<int>(n, 0), std::vector<int>(n, 0)};
      (which == 0 ? a.s : a.t)[j] = 1;
      const Vector c = pauli_coefficients(conjugate_by(u, pauli_op(a, d, n)));
      if (c.cwiseAbs2().maxCoeff() < 1.0 - tol) return false;
    }
  return true;
}

}  // namespace paulilens
