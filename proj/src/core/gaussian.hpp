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

#include "core/random.hpp"
#include "core/sensitivity.hpp"
#include "core/tensor.hpp"

namespace paulilens {

/// Majorana operators from the Jordan-Wigner strings
/// gamma_{2k} = Z^{(x)k} X I..., gamma_{2k+1} = Z^{(x)k} Y I... (0-based).
struct GammaBasis {
  int n = 1;
  std::vector<Operator> gammas;
};

GammaBasis gamma_basis(int n);

/// Subsets of [2n] are bitmasks; bit i selects gamma_i.
using GammaSubset = std::uint64_t;

/// Ascending-order product gamma_{i1} gamma_{i2} ... for i1 < i2 < ...
Operator gamma_monomial(const GammaBasis& b, GammaSubset s);

/// gamma^S = phase * P_code. The map S -> code is a bijection onto the qubit
/// Pauli labels.
struct MonomialLabel {
  std::int64_t code;
  Complex phase;
};
MonomialLabel monomial_label(int n, GammaSubset s);
/// Subset whose monomial is proportional to the Pauli label `code`.
GammaSubset subset_of_label(int n, std::int64_t code);

/// Gaussian spectrum: coeffs[S] = <gamma^S, O>, probs[S] = |coeffs[S]|^2
/// renormalized. Indexed by subset mask.
struct GaussianSpectrum {
  int n = 1;
  Vector coeffs;
  RealVector probs;
};

GaussianSpectrum gaussian_spectrum(const Operator& o);
double gaussian_influence(const GaussianSpectrum& s);

/// c_S -> e^{-t|S|} c_S.
Operator carlen_lieb_apply(const Operator& o, double t);

/// |S(a)| for every qubit Pauli code a.
std::vector<int> gaussian_weights(int n);

/// T^G[S', S] = <gamma^{S'}, U gamma^S U^\dagger>.
TransitionMatrix gaussian_transition_matrix(const Operator& u);

/// Spectral norm of (T^G)^\dagger W^G T^G - W^G with W^G = diag(|S|). The
/// witness is expressed in the gamma basis.
SensitivityReport gaussian_circuit_sensitivity(const Operator& u,
                                               EigenMethod method = EigenMethod::kAuto);

bool is_matchgate(const Operator& u, double tol = 1e-8);

/// H = i sum_{j<k} h_jk gamma_j gamma_k with i.i.d. normal h.
Operator random_quadratic_hamiltonian(int n, Rng& rng);
Operator random_matchgate(int n, Rng& rng);

}  // namespace paulilens
