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

#include <cstdint>
#include <vector>

#include "core/linear_map.hpp"
#include "core/tensor.hpp"

namespace paulilens {

enum class Basis { kPauli, kGamma };

/// T[b, a] = <B_b, U B_a U^\dagger> for the basis B.
struct TransitionMatrix {
  int d = 2;
  int n = 1;
  Basis basis = Basis::kPauli;
  Matrix entries;
};

struct SensitivityReport {
  double value = 0;
  /// Signed eigenvalue of M realizing value.
  double eigenvalue = 0;
  Vector witness;
  int iterations = 0;
  bool degenerate = false;
};

enum class EigenMethod { kAuto, kDense, kPowerIteration };

/// Dense dimension up to which the eigenproblem is solved directly.
inline constexpr std::int64_t kDenseEigenLimit = 1024;

void require_unitary(const Operator& u, double tol = 1e-8);

TransitionMatrix transition_matrix(const Operator& u);

/// Largest |lambda| of M = T^\dagger W T - W for W = diag(weights).
///
/// I[U O U^\dagger] - I[O] = c^\dagger M c for the coefficient vector c of a
/// unit-norm O, because the coefficients of U O U^\dagger are T c and the
/// influence is the W-weighted squared norm. The sup over the unit sphere of
/// |c^\dagger M c| is therefore the spectral norm of the Hermitian M, and the
/// identity label (weight 0, fixed by T) spans a null direction, so restricting
/// to traceless O changes nothing.
SensitivityReport quadratic_form_sensitivity(const LinearMap& t,
                                             const std::vector<int>& weights,
                                             EigenMethod method = EigenMethod::kAuto);

SensitivityReport circuit_sensitivity(const Operator& u,
                                      EigenMethod method = EigenMethod::kAuto);

/// I[U O U^\dagger] - I[O] evaluated directly from both spectra.
double influence_change(const Operator& u, const Operator& o);

/// d/dt I[e^{-itH} O e^{itH}] at t = 0.
double influence_rate(const Operator& h, const Operator& o);

struct RateBound {
  double rate;
  double bound;
  bool satisfied;
};

/// |rate| against 4 k ||H||_inf; H must act on at most k qudits.
RateBound influence_rate_bound_check(const Operator& h, const Operator& o, int k);

bool is_stable(const Operator& u, double tol = 1e-8);
/// U maps every Pauli to a Pauli up to phase.
bool is_clifford(const Operator& u, double tol = 1e-8);

/// Codes of the n(d^2 - 1) weight-one Pauli labels.
std::vector<std::int64_t> weight_one_labels(int d, int n);

}  // namespace paulilens
