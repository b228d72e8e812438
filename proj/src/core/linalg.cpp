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

#include "core/linalg.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace paulilens {

Matrix hermitian_function(const Matrix& a,
                          const std::function<double(double)>& f) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success)
    throw ConvergenceError("Hermitian eigendecomposition failed");
  RealVector fv = es.eigenvalues().unaryExpr(f);
  return es.eigenvectors() * fv.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix expm_hermitian(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw ConvergenceError("Hermitian eigendecomposition failed");
  const Vector phases = es.eigenvalues().unaryExpr(
      [t](double e) { return std::polar(1.0, -t * e); });
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Operator evolution(const Operator& h, double t) {
  if (!h.is_hermitian(1e-9)) throw ArgumentError("Hamiltonian must be Hermitian");
  return Operator(h.d(), h.n(), expm_hermitian(h.matrix(), t));
}

double shannon_entropy(const RealVector& p) {
  double h = 0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p[i] > 0) h -= p[i] * std::log2(p[i]);
  return h;
}

RealVector hermitian_eigenvalues(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw ConvergenceError("Hermitian eigendecomposition failed");
  return es.eigenvalues();
}

double von_neumann_entropy(const Matrix& rho) {
  RealVector ev = hermitian_eigenvalues(rho);
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev[i] < 0) ev[i] = 0;  // roundoff on rank-deficient states
  return shannon_entropy(ev);
}

}  // namespace paulilens
