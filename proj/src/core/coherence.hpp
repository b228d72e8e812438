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

#include "core/sensitivity.hpp"
#include "core/tensor.hpp"

namespace paulilens {

/// Completely dephasing channel in the computational basis.
Operator dephase(const Operator& rho);

/// S(Delta(rho)) - S(rho) in bits.
double rel_entropy_coherence(const Operator& rho);

struct CoheringPowerResult {
  double value = 0;
  /// State realizing value.
  Operator witness{2, 1};
  bool witness_pure = true;
  int restarts_used = 0;
  int mixed_samples = 0;
  bool converged = false;
  bool exact = false;
};

inline constexpr int kMixedSamples = 256;

/// Lower bound on sup_rho |C_r(U rho U^\dagger) - C_r(rho)|: gradient ascent
/// over pure states (where C_r is the entropy of |psi|^2) plus Hilbert-Schmidt
/// mixed samples.
CoheringPowerResult cohering_power_search(const Operator& u, int restarts = 64,
                                          std::uint64_t seed = 0,
                                          int mixed_samples = kMixedSamples);

/// d/dt C_r(e^{-itH} rho e^{itH}) at t = 0, i Tr([H, rho] log2 Delta(rho)).
/// Throws SingularStateError if a diagonal entry of rho is below 1e-12.
double coherence_rate(const Operator& h, const Operator& rho);

/// |R_C| against 4 ||H||_inf D_max(rho || Delta(rho)).
RateBound coherence_rate_bound_check(const Operator& h, const Operator& rho);
/// |R_C| against 4 ||H||_inf k log2 d; H must act on at most k qudits.
RateBound coherence_rate_local_bound_check(const Operator& h, const Operator& rho,
                                           int k);

struct DmaxResult {
  double value = 0;
  bool support_violation = false;
};

/// log2 min{lambda : rho <= lambda sigma}; +inf with the flag set when the
/// support of rho is not contained in that of sigma.
DmaxResult d_max(const Operator& rho, const Operator& sigma);

}  // namespace paulilens
