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
#include <string>
#include <vector>

#include "core/certificate.hpp"
#include "core/json_io.hpp"

namespace paulilens {

inline constexpr const char* kSchema = "pauli-lens/1";

// Every report carries "schema" and "kind". Operators that must have unit l2
// norm are rescaled first; the measured norm is recorded as "input_norm".

Json report_spectrum(const Operator& o);
Json report_influence(const Operator& o);
Json report_cis(const Operator& u);
Json report_cis_gaussian(const Operator& u);
Json report_classify(const Operator& u, double tol);
Json report_magic(const Operator& u, int restarts, std::uint64_t seed);
/// A density operator yields a coherence report, a unitary a cohering-power
/// report.
Json report_coherence(const Operator& x, int restarts, std::uint64_t seed);
Json report_otoc(const Operator& o, int k, int m);
Json report_wigner(const Operator& o);
Json report_certificate(const CircuitPath& path, const CertificateOptions& opts);

struct AuditResult {
  bool violation = false;
  std::vector<std::string> problems;
};

/// Re-checks a certificate report: recorded cost against recorded bounds, the
/// all_bounds_hold flag, and, when the path is embedded, the cost, hash and
/// sensitivity bound recomputed from it. Malformed reports raise InputError.
AuditResult audit_report(const Json& report);

}  // namespace paulilens
