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

#include "core/spectrum.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"
#include "core/linalg.hpp"

namespace paulilens {

void require_unit_norm(const Operator& o, const char* what) {
  const double norm = l2_norm(o);
  if (!(std::abs(norm - 1.0) <= kNormTolerance))
    throw NormalizationError(std::string(what) + " must have unit l2 norm, got " +
                                 std::to_string(norm),
                             norm);
}

PauliSpectrum spectrum_from_coefficients(const Vector& coeffs, int d, int n) {
  if (coeffs.size() != pauli_count(d, n))
    throw ArgumentError("coefficient vector has the wrong length");
  PauliSpectrum s;
  s.d = d;
  s.n = n;
  s.coeffs = coeffs;
  s.probs = coeffs.cwiseAbs2();
  const double total = s.probs.sum();
  if (!(total > 0)) throw NormalizationError("zero operator has no spectrum", 0.0);
  s.probs /= total;
  return s;
}

PauliSpectrum pauli_spectrum(const Operator& o) {
  require_unit_norm(o);
  return spectrum_from_coefficients(pauli_coefficients(o), o.d(), o.n());
}

double influence_local(const PauliSpectrum& s, int j) {
  if (j < 0 || j >= s.n) throw ArgumentError("qudit index out of range");
  double acc = 0;
  for (Eigen::Index a = 0; a < s.probs.size(); ++a)
    if (pauli_site(a, s.d, j) != std::pair<int, int>{0, 0}) acc += s.probs[a];
  return acc;
}

double influence_total(const PauliSpectrum& s) {
  double acc = 0;
  for (Eigen::Index a = 0; a < s.probs.size(); ++a)
    acc += pauli_weight(a, s.d, s.n) * s.probs[a];
  return acc;
}

RealVector weight_distribution(const PauliSpectrum& s) {
  RealVector w = RealVector::Zero(s.n + 1);
  for (Eigen::Index a = 0; a < s.probs.size(); ++a)
    w[pauli_weight(a, s.d, s.n)] += s.probs[a];
  return w;
}

double fourier_entropy(const PauliSpectrum& s) { return shannon_entropy(s.probs); }

double fourier_min_entropy(const PauliSpectrum& s) {
  return -std::log2(s.probs.maxCoeff());
}

double fourier_renyi_entropy(const PauliSpectrum& s, double alpha) {
  if (!(alpha > 0)) throw ArgumentError("Renyi order must be positive");
  if (alpha == 1.0) return fourier_entropy(s);
  if (std::isinf(alpha)) return fourier_min_entropy(s);
  double acc = 0;
  for (Eigen::Index a = 0; a < s.probs.size(); ++a)
    if (s.probs[a] > 0) acc += std::pow(s.probs[a], alpha);
  return std::log2(acc) / (1.0 - alpha);
}

double binary_entropy(double p) {
  if (p <= 0 || p >= 1) return 0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

QfeiGap qfei_gap(const Operator& o) {
  const PauliSpectrum s = pauli_spectrum(o);
  QfeiGap g;
  g.entropy = fourier_entropy(s);
  g.influence = influence_total(s);
  g.bound = 2.0 * (std::log2(double(s.n)) + std::log2(double(s.d))) * g.influence +
            binary_entropy(s.probs[0]);
  g.satisfied = g.entropy <= g.bound + 1e-9;
  return g;
}

Operator depolarize(const Operator& o, int j, double g) {
  const int n = o.n();
  if (j < 0 || j >= n) throw ArgumentError("qudit index out of range");
  const SubsetMask rest = (n >= 32 ? ~0u : (1u << n) - 1u) & ~(1u << j);
  std::vector<int> kept;
  for (int i = 0; i < n; ++i)
    if (i != j) kept.push_back(i);
  const Operator reduced = partial_trace(o, rest).scaled(1.0 / o.d());
  const Operator averaged =
      kept.empty() ? Operator::identity(o.d(), n).scaled(reduced(0, 0))
                   : embed(reduced, kept, n);
  return o.scaled(1.0 - g) + averaged.scaled(g);
}

FiniteDifference depolarizing_sensitivity_check(const Operator& o, int j,
                                                double eps) {
  if (!(eps > 0 && eps <= 1e-3))
    throw ArgumentError("finite-difference step must lie in (0, 1e-3]");
  const PauliSpectrum s = pauli_spectrum(o);
  const double plus = std::pow(l2_norm(depolarize(o, j, eps)), 2);
  const double minus = std::pow(l2_norm(depolarize(o, j, -eps)), 2);
  return {(plus - minus) / (2 * eps), -2.0 * influence_local(s, j)};
}

double weighted_mass(const Vector& coeffs, const std::vector<int>& weights) {
  double acc = 0;
  for (Eigen::Index a = 0; a < coeffs.size(); ++a)
    acc += weights[a] * std::norm(coeffs[a]);
  return acc;
}

}  // namespace paulilens
