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

#include <catch_amalgamated.hpp>
#include <cmath>
#include <numbers>

#include "core/certificate.hpp"
#include "core/errors.hpp"
#include "core/gates.hpp"
#include "core/json_io.hpp"
#include "core/linalg.hpp"
#include "core/path.hpp"
#include "core/reports.hpp"
#include "support/oracles.hpp"
#include "support/paths.hpp"

using namespace paulilens;
using Catch::Matchers::WithinAbs;

namespace {

double max_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Distance after removing a global phase.
double phase_distance(const Operator& a, const Operator& b) {
  const Complex overlap = (b.matrix().adjoint() * a.matrix()).trace();
  const Complex phase = overlap / std::abs(overlap);
  return max_diff(a.matrix(), phase * b.matrix());
}

const Operator X = gate_local("X", 2);
const Operator Z = gate_local("Z", 2);

PathTerm term(std::vector<int> support, Operator h, double r) {
  PathTerm t;
  t.support = std::move(support);
  t.h = std::move(h);
  t.r = r;
  return t;
}

// CNOT = exp(-i pi/4 (Z I + I X - Z X)) up to a global phase.
CircuitPath cnot_path() {
  CircuitPath p;
  p.d = 2;
  p.n = 2;
  const double q = std::numbers::pi / 4;
  p.segments.push_back({1.0, {term({0}, Z, q), term({1}, X, q), term({0, 1}, kron(Z, X), -q)}});
  validate_path(p, true);
  return p;
}

CertificateOptions quick() {
  CertificateOptions o;
  o.restarts = 4;
  o.mixed_samples = 16;
  return o;
}

}  // namespace

TEST_CASE("path compilation") {
  Rng rng = stream_rng(80, 0);
  SECTION("empty path is the identity") {
    CircuitPath p;
    p.n = 2;
    CHECK(max_diff(compile_unitary(p).matrix(), Matrix::Identity(4, 4)) == 0);
    CHECK(path_cost(p) == 0);
  }
  SECTION("single term") {
    CircuitPath p;
    p.n = 2;
    const Operator h = random_traceless_hermitian(2, 2, rng);
    p.segments.push_back({1.0, {term({0, 1}, h, 0.8)}});
    validate_path(p, true);
    CHECK(max_diff(compile_unitary(p).matrix(), oracle::evolve(h.matrix(), 0.8)) < 1e-12);
    CHECK_THAT(path_cost(p), WithinAbs(0.8, 1e-15));
  }
  SECTION("splitting a segment changes neither the unitary nor the cost") {
    const Operator h = random_traceless_hermitian(2, 2, rng);
    CircuitPath one, two;
    one.n = two.n = 3;
    one.segments.push_back({1.0, {term({2, 0}, h, 1.3), term({1}, X, -0.4)}});
    two.segments.push_back({0.5, {term({2, 0}, h, 1.3), term({1}, X, -0.4)}});
    two.segments.push_back(two.segments.back());
    CHECK(max_diff(compile_unitary(one).matrix(), compile_unitary(two).matrix()) < 1e-12);
    CHECK_THAT(path_cost(one), WithinAbs(path_cost(two), 1e-15));
    CHECK_THAT(path_cost(one), WithinAbs(1.7, 1e-15));
    CHECK(max_diff(compile_unitary(one, 7).matrix(), compile_unitary(one).matrix()) < 1e-12);
  }
  SECTION("single-Hamiltonian paths reproduce the exponential") {
    for (int trial = 0; trial < 5; ++trial) {
      const CircuitPath p = testpaths::random_path(2, 3, 1, rng);
      const Operator h = segment_hamiltonian(p, p.segments[0]);
      const Operator expected(2, 3, oracle::evolve(h.matrix(), p.segments[0].duration));
      REQUIRE(operator_norm(compile_unitary(p) - expected) < 1e-9);
    }
  }
  CHECK_THROWS_AS(compile_unitary(cnot_path(), 0), ArgumentError);
}

TEST_CASE("path validation") {
  CircuitPath p;
  p.n = 2;
  p.segments.push_back({0.5, {term({0}, Z.scaled(3), 1.0)}});
  CircuitPath strict = p;
  CHECK_THROWS_AS(validate_path(strict, true), ArgumentError);
  validate_path(p, false);
  CHECK(p.warnings.size() == 1);
  CHECK_THAT(p.segments[0].terms[0].r, WithinAbs(3, 1e-12));
  CHECK_THAT(path_cost(p), WithinAbs(1.5, 1e-12));

  const auto rejects = [](PathSegment seg) {
    CircuitPath q;
    q.n = 2;
    q.segments.push_back(std::move(seg));
    CHECK_THROWS_AS(validate_path(q, false), ArgumentError);
  };
  rejects({0.0, {term({0}, Z, 1)}});
  rejects({1.0, {term({0}, Operator::identity(2, 1), 1)}});
  rejects({1.0, {term({0, 0}, kron(Z, Z), 1)}});
  rejects({1.0, {term({0, 2}, kron(Z, Z), 1)}});
  rejects({1.0, {term({0, 1}, Z, 1)}});
  rejects({1.0, {term({0}, Operator(2, 1, Matrix::Ones(2, 2) * Complex(0, 1)), 1)}});
}

TEST_CASE("complexity certificate") {
  SECTION("identity path") {
    CircuitPath p;
    p.n = 2;
    const CertificateReport r = complexity_certificate(p, quick());
    CHECK(r.path_cost == 0);
    CHECK_THAT(r.cis_bound, WithinAbs(0, 1e-12));
    CHECK(r.magic_bound == 0);
    CHECK(r.coherence_bound == 0);
    CHECK(r.all_bounds_hold);
  }
  SECTION("CNOT path") {
    const CircuitPath p = cnot_path();
    CHECK(phase_distance(compile_unitary(p), gate_local("CNOT", 2)) < 1e-12);
    const CertificateReport r = complexity_certificate(p, quick());
    CHECK_THAT(r.cis, WithinAbs(1, 1e-9));
    CHECK_THAT(r.cis_bound, WithinAbs(0.125, 1e-9));
    CHECK_THAT(r.path_cost, WithinAbs(3 * std::numbers::pi / 4, 1e-12));
    CHECK(r.magic_power == 0);
    CHECK(r.magic_exact);
    CHECK(r.all_bounds_hold);
  }
  SECTION("random paths") {
    Rng rng = stream_rng(81, 0);
    for (int trial = 0; trial < 10; ++trial) {
      const CircuitPath p = testpaths::random_path(2, 3, 3, rng);
      const CertificateReport r = complexity_certificate(p, quick());
      REQUIRE(r.all_bounds_hold);
      REQUIRE_THAT(r.cis_bound, WithinAbs(cis_cost_bound(r.cis), 1e-15));
      REQUIRE(r.compiled_unitary_hash == unitary_hash(compile_unitary(p)));
    }
  }
  SECTION("bound formulas") {
    CHECK_THAT(cis_cost_bound(1), WithinAbs(0.125, 1e-15));
    CHECK_THAT(magic_cost_bound(2, 2),
               WithinAbs(std::numbers::e / (32 * std::numbers::log2e) * 2, 1e-15));
    CHECK_THAT(coherence_cost_bound(1, 2), WithinAbs(0.125, 1e-15));
    CHECK_THAT(coherence_cost_bound(1, 4), WithinAbs(0.0625, 1e-15));
    CHECK(bounds_hold(1, 1, 0.5, 1 + 5e-8));
    CHECK_FALSE(bounds_hold(1, 1, 0.5, 1 + 1e-6));
  }
  SECTION("hash") {
    CHECK(unitary_hash(X) == unitary_hash(gate_local("X", 2)));
    CHECK(unitary_hash(X) != unitary_hash(Z));
    CHECK(unitary_hash(Operator::identity(2, 1)) != unitary_hash(Operator::identity(2, 2)));
    CHECK(unitary_hash(X).size() == 16);
  }
}

TEST_CASE("gate taxonomy") {
  const Operator i2 = Operator::identity(2, 2);
  const Operator u1 = kron(evolution(Z, 0.3), Operator::identity(2, 1));

  const GateClass swap = classify_gate(gate_local("SWAP", 2));
  CHECK(swap.clifford);
  CHECK(swap.stable);
  CHECK(swap.gaussian_stable == false);

  const GateClass gzx = classify_gate(gate_local("GZX", 2));
  CHECK_FALSE(gzx.stable);
  CHECK(gzx.gaussian_stable == true);

  const GateClass local = classify_gate(u1);
  CHECK(local.stable);
  CHECK(local.gaussian_stable == true);

  const GateClass id = classify_gate(i2);
  CHECK(id.clifford);
  CHECK(id.stable);
  CHECK(id.gaussian_stable == true);

  const GateClass cnot = classify_gate(gate_local("CNOT", 2));
  CHECK(cnot.clifford);
  CHECK_FALSE(cnot.stable);
  CHECK(cnot.gaussian_stable == false);
  CHECK_THAT(cnot.cis, WithinAbs(1, 1e-9));

  const GateClass t = classify_gate(gate_local("T", 2));
  CHECK_FALSE(t.clifford);
  CHECK(t.stable);
  CHECK_THAT(t.magic_entropy, WithinAbs(1, 1e-9));
  // T is a Z rotation, i.e. generated by i*gamma_1*gamma_2, so it is a matchgate.
  CHECK(t.gaussian_stable == true);

  // A generic single-qubit gate on the first qubit is stable but not Gaussian.
  const GateClass hadamard = classify_gate(named_gate("H", {0}, 2, 2));
  CHECK(hadamard.stable);
  CHECK(hadamard.gaussian_stable == false);

  const GateClass qutrit = classify_gate(gate_local("CNOT", 3));
  CHECK_FALSE(qutrit.gaussian_stable.has_value());
  CHECK_FALSE(qutrit.cis_gaussian.has_value());
}

TEST_CASE("JSON ingestion") {
  SECTION("matrix and gate forms") {
    const Json j = parse_json(R"({"d":2,"n":1,"re":[[0,1],[1,0]]})");
    CHECK(max_diff(operator_from_json(j).matrix(), X.matrix()) == 0);
    const Operator y = operator_from_json(
        parse_json(R"({"d":2,"n":1,"re":[[0,0],[0,0]],"im":[[0,-1],[1,0]]})"));
    CHECK(max_diff(y.matrix(), gate_local("Y", 2).matrix()) < 1e-15);
    const Operator cnot =
        operator_from_json(parse_json(R"({"gate":"CNOT","targets":[1,0],"n":3})"));
    CHECK(cnot.n() == 3);
    CHECK(max_diff(cnot.matrix(), named_gate("CNOT", {1, 0}, 2, 3).matrix()) == 0);
    const Operator back = operator_from_json(operator_to_json(y));
    CHECK(max_diff(back.matrix(), y.matrix()) == 0);
  }
  SECTION("malformed inputs") {
    CHECK_THROWS_AS(parse_json("{"), InputError);
    CHECK_THROWS_AS(operator_from_json(parse_json(R"({"d":2,"re":[[1]]})")), InputError);
    CHECK_THROWS_AS(operator_from_json(parse_json(R"({"d":2,"n":1,"re":[[1,0]]})")), InputError);
    CHECK_THROWS_AS(operator_from_json(parse_json(R"({"d":2,"n":1,"re":[[1,"a"],[0,1]]})")),
                    InputError);
    CHECK_THROWS_AS(operator_from_json(parse_json(R"({"gate":"FOO","targets":[0]})")),
                    ArgumentError);
  }
  SECTION("path with Pauli words and whole-register terms") {
    const Json j = parse_json(R"({"d":2,"n":3,"segments":[{"duration":1,"terms":[
        {"support":[0,2],"h":{"pauli":"ZX"},"r":0.5},
        {"support":[2,1],"h":{"gate":"Z","targets":[1],"n":3},"r":0.25}]}]})");
    // The second term is Z on qubit 1 written on the full register.
    const CircuitPath p = path_from_json(j, true);
    CHECK(p.segments[0].terms[1].support == std::vector<int>{1, 2});
    CHECK(max_diff(p.segments[0].terms[1].h.matrix(),
                   kron(Z, Operator::identity(2, 1)).matrix()) < 1e-14);
    CHECK_THAT(path_cost(p), WithinAbs(0.75, 1e-15));
    const Matrix h = 0.5 * (named_gate("Z", {0}, 2, 3) * named_gate("X", {2}, 2, 3)).matrix() +
                     0.25 * named_gate("Z", {1}, 2, 3).matrix();
    const Operator expected(2, 3, oracle::evolve(h, 1.0));
    CHECK(max_diff(compile_unitary(p).matrix(), expected.matrix()) < 1e-12);

    const Json outside = parse_json(R"({"d":2,"n":3,"segments":[{"duration":1,"terms":[
        {"support":[0,1],"h":{"gate":"Z","targets":[2],"n":3},"r":1}]}]})");
    CHECK_THROWS_AS(path_from_json(outside, true), SupportError);
    const Json scaled = parse_json(R"({"d":2,"n":1,"segments":[{"duration":1,"terms":[
        {"support":[0],"h":{"d":2,"n":1,"re":[[2,0],[0,-2]]},"r":1}]}]})");
    CHECK_THROWS_AS(path_from_json(scaled, true), ArgumentError);
    CHECK(path_from_json(scaled, false).warnings.size() == 1);
  }
}

TEST_CASE("certificate reports and audits") {
  const Json report = report_certificate(cnot_path(), quick());
  CHECK(report["schema"] == "pauli-lens/1");
  CHECK(report["kind"] == "certificate");
  CHECK(report["all_bounds_hold"] == true);
  const AuditResult ok = audit_report(parse_json(report.dump()));
  CHECK_FALSE(ok.violation);
  CHECK(ok.problems.empty());

  SECTION("cost below a bound") {
    Json bad = report;
    bad["path_cost"] = 0.01;
    CHECK(audit_report(bad).violation);
  }
  SECTION("inconsistent flag") {
    Json bad = report;
    bad["all_bounds_hold"] = false;
    CHECK(audit_report(bad).violation);
  }
  SECTION("tampered bound") {
    Json bad = report;
    bad["cis_bound"] = 0.01;
    CHECK(audit_report(bad).violation);
  }
  SECTION("tampered path") {
    Json bad = report;
    bad["path"]["segments"][0]["terms"][0]["r"] = 0.5;
    CHECK(audit_report(bad).violation);
  }
  SECTION("wrong schema") {
    Json bad = report;
    bad["schema"] = "other/2";
    CHECK_THROWS_AS(audit_report(bad), InputError);
  }
}

TEST_CASE("reports carry the schema tag") {
  for (const Json& j : {report_spectrum(X), report_influence(X), report_cis(gate_local("CNOT", 2)),
                        report_cis_gaussian(gate_local("SWAP", 2)),
                        report_classify(gate_local("T", 2), 1e-8), report_wigner(X),
                        report_magic(gate_local("T", 2), 4, 0),
                        report_coherence(gate_local("H", 2), 4, 0),
                        report_otoc(named_gate("Z", {1}, 2, 2), 1, 1)})
    REQUIRE(j["schema"] == "pauli-lens/1");
}
