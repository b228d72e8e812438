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
#include <optional>
#include <string>

#include "core/path.hpp"

namespace paulilens {

inline constexpr double kBoundSlack = 1e-7;

struct CertificateOptions {
  int restarts = 64;
  std::uint64_t seed = 0;
  int mixed_samples = 256;
};

struct CertificateReport {
  double path_cost = 0;
  double cis = 0;
  double magic_power = 0;     // search lower bound
  double cohering_power = 0;  // search lower bound
  bool magic_exact = false;
  bool coherence_exact = false;
  double cis_bound = 0;
  double magic_bound = 0;
  double coherence_bound = 0;
  std::string compiled_unitary_hash;
  bool all_bounds_hold = false;
};

/// cis / 8
double cis_cost_bound(double cis);
/// e / (8 d^2 log2 e) * magic
double magic_cost_bound(double magic, int d);
/// coherence / (8 log2 d)
double coherence_cost_bound(double coherence, int d);

/// path_cost >= bound - kBoundSlack for all three bounds.
bool bounds_hold(double cost, double cis_bound, double magic_bound,
                 double coherence_bound);

CertificateReport complexity_certificate(const CircuitPath& path,
                                         const CertificateOptions& opts = {});

/// FNV-1a over the entries rounded to 1e-12, as 16 hex digits.
std::string unitary_hash(const Operator& u);

struct GateClass {
  bool clifford = false;
  bool stable = false;
  std::optional<bool> gaussian_stable;  // qubits only
  double magic_entropy = 0;
  double cis = 0;
  std::optional<double> cis_gaussian;   // qubits only
};

GateClass classify_gate(const Operator& u, double tol = 1e-8);

}  // namespace paulilens
