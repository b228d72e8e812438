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

#include "core/coherence.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/linalg.hpp"
#include "core/random.hpp"
#include "core/search.hpp"

namespace paulilens {
namespace {

// Permutation times diagonal phases: maps incoherent states to incoherent
// states and commutes with dephasing up to relabeling.
bool is_incoherent_monomial(const Operator& u) {
  for (std::int64_t c = 0; c < u.dim(); ++c) {
    int big = 0;
    for (std::int64_t r = 0; r < u.dim(); ++r) {
      const double a = std::abs(u(r, c));
      if (a > 1e-12) {
        if (std::abs(a - 1.0) > 1e-10) return false;
        ++big;
      }
    }
    if (big != 1) return false;
  }
  return true;
}

}  // namespace

Operator dephase(const Operator& rho) {
  Matrix m = Matrix::Zero(rho.dim(), rho.dim());
  m.diagonal() = rho.matrix().diagonal();
  return Operator(rho.d(), rho.n(), std::move(m));
}

double rel_entropy_coherence(const Operator& rho) {
  check_state(rho, 1e-8);
  return von_neumann_entropy(dephase(rho).matrix()) - von_neumann_entropy(rho.matrix());
}

CoheringPowerResult cohering_power_search(const Operator& u, int restarts,
                                          std::uint64_t seed, int mixed_samples) {
  require_unitary(u);
  if (mixed_samples < 0) throw ArgumentError("mixed sample count must be non-negative");
  const int d = u.d(), n = u.n();
  const std::int64_t dim = u.dim();
  CoheringPowerResult out;
  {
    Matrix ground = Matrix::Zero(dim, dim);
    ground(0, 0) = 1;
    out.witness = Operator(d, n, ground);
  }
  if (is_incoherent_monomial(u)) {
    out.converged = true;
    out.exact = true;
    return out;
  }

  SearchOptions opts;
  opts.restarts = restarts;
  opts.seed = seed;
  const SearchResult pure = maximize_entropy_change(LinearMap::dense(u.matrix()), opts);
  const Vector& psi = pure.witness;
  out.witness = Operator(d, n, psi * psi.adjoint());
  out.value = pure.value;
  out.witness_pure = true;
  out.restarts_used = pure.restarts_used;
  out.converged = pure.converged;

  std::vector<double> values(mixed_samples);
  std::vector<Operator> states(mixed_samples, Operator(d, n));
  parallel_for(mixed_samples, [&](int i) {
    Rng rng = stream_rng(seed, (std::uint64_t{1} << 40) + static_cast<std::uint64_t>(i));
    states[i] = random_density(d, n, rng);
    values[i] = std::abs(rel_entropy_coherence(conjugate_by(u, states[i])) -
                         rel_entropy_coherence(states[i]));
  });
  for (int i = 0; i < mixed_samples; ++i)
    if (values[i] > out.value) {
      out.value = values[i];
      out.witness = states[i];
      out.witness_pure = false;
    }
  out.mixed_samples = mixed_samples;
  out.exact = out.value >= std::log2(static_cast<double>(dim)) - 1e-9;
  return out;
}

double coherence_rate(const Operator& h, const Operator& rho) {
  if (!h.is_hermitian(1e-9)) throw ArgumentError("Hamiltonian must be Hermitian");
  check_state(rho, 1e-8);
  if (!h.same_shape(rho)) throw ArgumentError("Hamiltonian and state shapes differ");
  const auto diag = rho.matrix().diagonal().real();
  Vector log_delta(rho.dim());
  for (std::int64_t i = 0; i < rho.dim(); ++i) {
    if (diag[i] < 1e-12)
      throw SingularStateError("diagonal entry " + std::to_string(i) +
                               " vanishes; log Delta(rho) is undefined");
    log_delta[i] = std::log2(diag[i]);
  }
  const Matrix comm = h.matrix() * rho.matrix() - rho.matrix() * h.matrix();
  // Tr(C D) for diagonal D only needs the diagonal of C.
  const Complex tr = comm.diagonal().cwiseProduct(log_delta).sum();
  return (Complex(0, 1) * tr).real();
}

RateBound coherence_rate_bound_check(const Operator& h, const Operator& rho) {
  RateBound r;
  r.rate = coherence_rate(h, rho);
  const DmaxResult dm = d_max(rho, dephase(rho));
  r.bound = 4.0 * operator_norm(h) * dm.value;
  r.satisfied = std::abs(r.rate) <= r.bound + 1e-9;
  return r;
}

RateBound coherence_rate_local_bound_check(const Operator& h, const Operator& rho,
                                           int k) {
  if (k < 0) throw ArgumentError("support size must be non-negative");
  if (std::popcount(support_of(h)) > k)
    throw SupportError("Hamiltonian acts on more than k = " + std::to_string(k) +
                       " qudits");
  RateBound r;
  r.rate = coherence_rate(h, rho);
  r.bound = 4.0 * operator_norm(h) * k * std::log2(double(h.d()));
  r.satisfied = std::abs(r.rate) <= r.bound + 1e-9;
  return r;
}

DmaxResult d_max(const Operator& rho, const Operator& sigma) {
  check_state(rho, 1e-8);
  check_state(sigma, 1e-8);
  if (!rho.same_shape(sigma)) throw ArgumentError("state shapes differ");
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma.matrix());
  if (es.info() != Eigen::Success) throw ConvergenceError("eigensolver failed");
  const RealVector& ev = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  std::vector<Eigen::Index> support, kernel;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    (ev[i] > 1e-12 ? support : kernel).push_back(i);
  double leak = 0;
  for (Eigen::Index i : kernel)
    leak += (v.col(i).adjoint() * rho.matrix() * v.col(i)).value().real();
  DmaxResult out;
  if (leak > 1e-10) {
    out.value = kInf;
    out.support_violation = true;
    return out;
  }
  Matrix b = Matrix::Zero(rho.dim(), rho.dim());
  for (Eigen::Index i : support)
    b += v.col(i) * v.col(i).adjoint() / std::sqrt(ev[i]);
  const Matrix m = b * rho.matrix() * b;
  out.value = std::log2(hermitian_eigenvalues((m + m.adjoint()) * 0.5).maxCoeff());
  return out;
}

}  // namespace paulilens
