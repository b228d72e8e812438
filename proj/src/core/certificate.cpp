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

#include "core/certificate.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "core/coherence.hpp"
#include "core/gaussian.hpp"
#include "core/magic.hpp"
#include "core/sensitivity.hpp"

namespace paulilens {

double cis_cost_bound(double cis) { return cis / 8.0; }

double magic_cost_bound(double magic, int d) {
  return std::numbers::e / (8.0 * d * d * std::numbers::log2e) * magic;
}

double coherence_cost_bound(double coherence, int d) {
  return coherence / (8.0 * std::log2(double(d)));
}

bool bounds_hold(double cost, double cis_bound, double magic_bound,
                 double coherence_bound) {
  return cost >= cis_bound - kBoundSlack && cost >= magic_bound - kBoundSlack &&
         cost >= coherence_bound - kBoundSlack;
}

std::string unitary_hash(const Operator& u) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&h](double x) {
    std::int64_t q = std::llround(x * 1e12);
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(q >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  feed(u.d());
  feed(u.n());
  for (std::int64_t c = 0; c < u.dim(); ++c)
    for (std::int64_t r = 0; r < u.dim(); ++r) {
      feed(u(r, c).real());
      feed(u(r, c).imag());
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CertificateReport complexity_certificate(const CircuitPath& path,
                                         const CertificateOptions& opts) {
  const Operator u = compile_unitary(path);
  CertificateReport r;
  r.path_cost = path_cost(path);
  r.compiled_unitary_hash = unitary_hash(u);
  r.cis = circuit_sensitivity(u).value;
  const SearchResult magic = magic_power_search(u, opts.restarts, opts.seed);
  r.magic_power = magic.value;
  r.magic_exact = magic.exact;
  const CoheringPowerResult coh =
      cohering_power_search(u, opts.restarts, opts.seed, opts.mixed_samples);
  r.cohering_power = coh.value;
  r.coherence_exact = coh.exact;
  r.cis_bound = cis_cost_bound(r.cis);
  r.magic_bound = magic_cost_bound(r.magic_power, path.d);
  r.coherence_bound = coherence_cost_bound(r.cohering_power, path.d);
  r.all_bounds_hold = bounds_hold(r.path_cost, r.cis_bound, r.magic_bound,
                                  r.coherence_bound);
  return r;
}

GateClass classify_gate(const Operator& u, double tol) {
  require_unitary(u);
  GateClass g;
  g.clifford = is_clifford(u, tol);
  g.stable = is_stable(u, tol);
  g.magic_entropy = magic_entropy(u);
  g.cis = circuit_sensitivity(u).value;
  if (u.d() == 2) {
    g.gaussian_stable = is_matchgate(u, tol);
    g.cis_gaussian = gaussian_circuit_sensitivity(u).value;
  }
  return g;
}

}  // namespace paulilens
