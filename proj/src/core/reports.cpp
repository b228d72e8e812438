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

#include "core/reports.hpp"

#include <cmath>

#include "core/coherence.hpp"
#include "core/errors.hpp"
#include "core/gaussian.hpp"
#include "core/magic.hpp"
#include "core/otoc.hpp"
#include "core/sensitivity.hpp"
#include "core/spectrum.hpp"
#include "core/wigner.hpp"

namespace paulilens {
namespace {

Json header(const char* kind, const Operator& o) {
  return {{"schema", kSchema}, {"kind", kind}, {"d", o.d()}, {"n", o.n()}};
}

Operator unit_norm(const Operator& o, Json& report) {
  const double norm = l2_norm(o);
  if (norm == 0) throw NormalizationError("the zero operator cannot be normalized", 0.0);
  report["input_norm"] = norm;
  return o.scaled(1.0 / norm);
}

Json real_vector(const RealVector& v) {
  return Json(std::vector<double>(v.data(), v.data() + v.size()));
}

Json sensitivity_json(const SensitivityReport& r) {
  return {{"value", r.value},
          {"eigenvalue", r.eigenvalue},
          {"degenerate", r.degenerate},
          {"iterations", r.iterations},
          {"witness", complex_vector_to_json(r.witness)}};
}

template <typename T>
T number(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("report lacks '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InputError(std::string("report field '") + key + "' has the wrong type");
  }
}

}  // namespace

Json report_spectrum(const Operator& o) {
  Json j = header("spectrum", o);
  const PauliSpectrum s = pauli_spectrum(unit_norm(o, j));
  j["probs"] = real_vector(s.probs);
  j["coeffs"] = complex_vector_to_json(s.coeffs);
  j["weights"] = real_vector(weight_distribution(s));
  j["entropy"] = fourier_entropy(s);
  j["min_entropy"] = fourier_min_entropy(s);
  j["influence"] = influence_total(s);
  return j;
}

Json report_influence(const Operator& o) {
  Json j = header("influence", o);
  const Operator u = unit_norm(o, j);
  const PauliSpectrum s = pauli_spectrum(u);
  std::vector<double> local;
  for (int q = 0; q < s.n; ++q) local.push_back(influence_local(s, q));
  j["local"] = local;
  j["total"] = influence_total(s);
  const QfeiGap g = qfei_gap(u);
  j["qfei"] = {{"entropy", g.entropy}, {"influence", g.influence},
               {"bound", g.bound}, {"satisfied", g.satisfied}};
  if (o.d() == 2) j["gaussian_influence"] = gaussian_influence(gaussian_spectrum(u));
  return j;
}

Json report_cis(const Operator& u) {
  Json j = header("cis", u);
  j["cis"] = sensitivity_json(circuit_sensitivity(u));
  j["stable"] = is_stable(u);
  return j;
}

Json report_cis_gaussian(const Operator& u) {
  Json j = header("cis-gaussian", u);
  j["cis_gaussian"] = sensitivity_json(gaussian_circuit_sensitivity(u));
  j["matchgate"] = is_matchgate(u);
  return j;
}

Json report_classify(const Operator& u, double tol) {
  Json j = header("classify", u);
  const GateClass g = classify_gate(u, tol);
  j["clifford"] = g.clifford;
  j["stable"] = g.stable;
  j["gaussian_stable"] = g.gaussian_stable ? Json(*g.gaussian_stable) : Json(nullptr);
  j["magic_entropy"] = g.magic_entropy;
  j["cis"] = g.cis;
  j["cis_gaussian"] = g.cis_gaussian ? Json(*g.cis_gaussian) : Json(nullptr);
  j["tol"] = tol;
  return j;
}

Json report_magic(const Operator& u, int restarts, std::uint64_t seed) {
  Json j = header("magic", u);
  j["magic_entropy"] = magic_entropy(u);
  const SearchResult r = magic_power_search(u, restarts, seed);
  j["magic_power"] = {{"value", r.value},
                      {"lower_bound", true},
                      {"exact", r.exact},
                      {"converged", r.converged},
                      {"restarts_used", r.restarts_used},
                      {"seed", seed},
                      {"witness", complex_vector_to_json(r.witness)}};
  j["cis"] = circuit_sensitivity(u).value;
  return j;
}

Json report_coherence(const Operator& x, int restarts, std::uint64_t seed) {
  bool is_state = true;
  try {
    check_state(x, 1e-8);
  } catch (const ArgumentError&) {
    is_state = false;
  }
  if (is_state) {
    Json j = header("coherence", x);
    j["relative_entropy_of_coherence"] = rel_entropy_coherence(x);
    const DmaxResult dm = d_max(x, dephase(x));
    j["dmax_to_dephased"] = dm.support_violation ? Json(nullptr) : Json(dm.value);
    return j;
  }
  if (!x.is_unitary(1e-8))
    throw ArgumentError("coherence input must be a density operator or a unitary");
  Json j = header("cohering-power", x);
  const CoheringPowerResult r = cohering_power_search(x, restarts, seed);
  j["cohering_power"] = {{"value", r.value},
                         {"lower_bound", true},
                         {"exact", r.exact},
                         {"converged", r.converged},
                         {"restarts_used", r.restarts_used},
                         {"mixed_samples", r.mixed_samples},
                         {"witness_pure", r.witness_pure},
                         {"seed", seed},
                         {"witness", operator_to_json(r.witness)}};
  return j;
}

Json report_otoc(const Operator& o, int k, int m) {
  Json j = header("otoc", o);
  const Operator u = unit_norm(o, j);
  auto pack = [](const CorrelatorReport& r) {
    return Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"abs_err", r.abs_err}};
  };
  if (o.n() >= 2) j["weight1"] = pack(avg_otoc_weight1(u));
  if (o.d() == 2) {
    j["k"] = k;
    j["m"] = m;
    j["four_point"] = pack(avg_4pt_weight_m(u, k, m));
    Json eight = pack(avg_8pt(u, k, m));
    eight["wigner_form"] = avg_8pt_wigner(u, k, m);
    j["eight_point"] = eight;
  }
  return j;
}

Json report_wigner(const Operator& o) {
  Json j = header("wigner", o);
  const WignerFunction w = wigner_function(o);
  j["values"] = complex_vector_to_json(w.values);
  const Vector back = symplectic_ft(w);
  j["roundtrip_error"] = (back - hermitian_coefficients(o)).cwiseAbs().maxCoeff();
  return j;
}

Json report_certificate(const CircuitPath& path, const CertificateOptions& opts) {
  const CertificateReport r = complexity_certificate(path, opts);
  Json j = {{"schema", kSchema}, {"kind", "certificate"}, {"d", path.d}, {"n", path.n}};
  j["path_cost"] = r.path_cost;
  j["cis"] = r.cis;
  j["magic_power_lower"] = r.magic_power;
  j["cohering_power_lower"] = r.cohering_power;
  j["magic_exact"] = r.magic_exact;
  j["coherence_exact"] = r.coherence_exact;
  j["cis_bound"] = r.cis_bound;
  j["magic_bound"] = r.magic_bound;
  j["coherence_bound"] = r.coherence_bound;
  j["compiled_unitary_hash"] = r.compiled_unitary_hash;
  j["all_bounds_hold"] = r.all_bounds_hold;
  j["restarts"] = opts.restarts;
  j["seed"] = opts.seed;
  j["warnings"] = path.warnings;
  j["path"] = path_to_json(path);
  return j;
}

AuditResult audit_report(const Json& report) {
  if (!report.is_object()) throw InputError("report must be a JSON object");
  if (number<std::string>(report, "schema") != kSchema)
    throw InputError("unsupported report schema");
  if (number<std::string>(report, "kind") != "certificate")
    throw InputError("only certificate reports can be audited");
  const double cost = number<double>(report, "path_cost");
  const double cb = number<double>(report, "cis_bound");
  const double mb = number<double>(report, "magic_bound");
  const double hb = number<double>(report, "coherence_bound");
  const bool flag = number<bool>(report, "all_bounds_hold");
  const auto hash = number<std::string>(report, "compiled_unitary_hash");

  AuditResult out;
  auto fail = [&out](std::string why) {
    out.violation = true;
    out.problems.push_back(std::move(why));
  };
  const char* names[] = {"cis_bound", "magic_bound", "coherence_bound"};
  const double bounds[] = {cb, mb, hb};
  for (int i = 0; i < 3; ++i)
    if (!(cost >= bounds[i] - kBoundSlack))
      fail(std::string("path_cost ") + std::to_string(cost) + " is below " + names[i] +
           " " + std::to_string(bounds[i]));
  if (flag != bounds_hold(cost, cb, mb, hb))
    fail("all_bounds_hold disagrees with the recorded numbers");

  const int d = report.contains("d") ? number<int>(report, "d") : 2;
  if (report.contains("cis") && std::abs(cis_cost_bound(number<double>(report, "cis")) - cb) > 1e-9)
    fail("cis_bound is not cis / 8");
  if (report.contains("magic_power_lower") &&
      std::abs(magic_cost_bound(number<double>(report, "magic_power_lower"), d) - mb) > 1e-9)
    fail("magic_bound does not follow from magic_power_lower");
  if (report.contains("cohering_power_lower") &&
      std::abs(coherence_cost_bound(number<double>(report, "cohering_power_lower"), d) - hb) >
          1e-9)
    fail("coherence_bound does not follow from cohering_power_lower");

  if (report.contains("path")) {
    const CircuitPath path = path_from_json(report.at("path"), false);
    const double recomputed = path_cost(path);
    if (std::abs(recomputed - cost) > 1e-9 * std::max(1.0, std::abs(cost)))
      fail("path_cost differs from the embedded path (" + std::to_string(recomputed) + ")");
    const Operator u = compile_unitary(path);
    if (unitary_hash(u) != hash) fail("compiled_unitary_hash differs from the embedded path");
    const double cis = circuit_sensitivity(u).value;
    if (std::abs(cis_cost_bound(cis) - cb) > kBoundSlack)
      fail("cis_bound differs from the embedded path (" + std::to_string(cis_cost_bound(cis)) + ")");
  }
  return out;
}

}  // namespace paulilens
