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

#include <vector>

#include "core/tensor.hpp"

namespace paulilens {

/// Input norms within this distance of 1 are accepted and renormalized.
inline constexpr double kNormTolerance = 1e-6;

/// Pauli spectrum of a unit-norm operator. coeffs[a] = <P_a, O>; probs[a] is
/// |coeffs[a]|^2 renormalized to sum to one. Both are indexed by Pauli code.
struct PauliSpectrum {
  int d = 2;
  int n = 1;
  Vector coeffs;
  RealVector probs;
};

/// Throws NormalizationError unless |l2_norm(o) - 1| <= kNormTolerance.
void require_unit_norm(const Operator& o, const char* what = "operator");

PauliSpectrum pauli_spectrum(const Operator& o);
/// Spectrum of a coefficient vector with unit Euclidean norm.
PauliSpectrum spectrum_from_coefficients(const Vector& coeffs, int d, int n);

double influence_local(const PauliSpectrum& s, int j);
double influence_total(const PauliSpectrum& s);
/// w[k] = total probability of weight-k labels.
RealVector weight_distribution(const PauliSpectrum& s);

/// Shannon entropy of probs, base 2.
double fourier_entropy(const PauliSpectrum& s);
double fourier_min_entropy(const PauliSpectrum& s);
double fourier_renyi_entropy(const PauliSpectrum& s, double alpha);

double binary_entropy(double p);

struct QfeiGap {
  double entropy;
  double influence;
  double bound;
  bool satisfied;
};

/// H[O] against 2 (log2 n + log2 d) I[O] + h(P_O[0]).
QfeiGap qfei_gap(const Operator& o);

struct FiniteDifference {
  double lhs;
  double rhs;
};

/// Central difference of ||D_g[O]||_2^2 at g = 0 for the depolarizing channel
/// on qudit j, against -2 I_j[O].
FiniteDifference depolarizing_sensitivity_check(const Operator& o, int j,
                                                double eps);

/// (1 - g) O + g (Tr_j O / d) (x) I_j
Operator depolarize(const Operator& o, int j, double g);

/// sum_a weight(a) |c_a|^2 with no normalization.
double weighted_mass(const Vector& coeffs, const std::vector<int>& weights);

}  // namespace paulilens
