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

// Exercises the shared library strictly through its C interface.

#include <catch_amalgamated.hpp>
#include <cmath>
#include <fstream>
#include "json.hpp"
#include <sstream>
#include <string>

#include "paulilens.h"

using Catch::Matchers::WithinAbs;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(PL_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string take(char* s) {
  std::string out = s ? s : "";
  pl_string_free(s);
  return out;
}

struct Op {
  pl_operator* ptr = nullptr;
  ~Op() { pl_operator_free(ptr); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(pl_version()).size() > 0);
  CHECK(std::string(pl_status_name(PL_OK)) == "ok");
  CHECK(std::string(pl_status_name(PL_ERR_NORMALIZATION)).size() > 0);
}

TEST_CASE("operators from raw arrays") {
  const double re[] = {0, 1, 1, 0};
  Op x;
  REQUIRE(pl_operator_new(2, 1, re, nullptr, &x.ptr) == PL_OK);
  int d = 0, n = 0;
  REQUIRE(pl_operator_dims(x.ptr, &d, &n) == PL_OK);
  CHECK(d == 2);
  CHECK(n == 1);
  double value = -1;
  REQUIRE(pl_influence(x.ptr, &value) == PL_OK);
  CHECK_THAT(value, WithinAbs(1, 1e-14));
  REQUIRE(pl_fourier_entropy(x.ptr, &value) == PL_OK);
  CHECK_THAT(value, WithinAbs(0, 1e-14));

  char* json = nullptr;
  REQUIRE(pl_operator_to_json(x.ptr, &json) == PL_OK);
  const auto parsed = nlohmann::json::parse(take(json));
  CHECK(parsed["re"][0][1] == 1.0);

  Op bad;
  CHECK(pl_operator_new(2, 1, nullptr, nullptr, &bad.ptr) == PL_ERR_ARGUMENT);
  CHECK(bad.ptr == nullptr);
  CHECK(std::string(pl_last_error()).size() > 0);
}

TEST_CASE("gate diagnostics") {
  const int targets[] = {0, 1};
  Op cnot;
  REQUIRE(pl_operator_gate("CNOT", targets, 2, 2, 2, &cnot.ptr) == PL_OK);
  double value = 0;
  REQUIRE(pl_circuit_sensitivity(cnot.ptr, &value) == PL_OK);
  CHECK_THAT(value, WithinAbs(1, 1e-9));
  int flag = -1;
  REQUIRE(pl_is_stable(cnot.ptr, 1e-8, &flag) == PL_OK);
  CHECK(flag == 0);
  REQUIRE(pl_magic_entropy(cnot.ptr, &value) == PL_OK);
  CHECK_THAT(value, WithinAbs(0, 1e-12));

  Op t;
  REQUIRE(pl_operator_gate("T", targets, 1, 2, 1, &t.ptr) == PL_OK);
  REQUIRE(pl_magic_power(t.ptr, 8, 0, &value) == PL_OK);
  CHECK_THAT(value, WithinAbs(1, 1e-9));
  REQUIRE(pl_is_matchgate(t.ptr, 1e-8, &flag) == PL_OK);
  CHECK(flag == 1);

  Op swap;
  REQUIRE(pl_operator_gate("SWAP", targets, 2, 2, 2, &swap.ptr) == PL_OK);
  REQUIRE(pl_gaussian_circuit_sensitivity(swap.ptr, &value) == PL_OK);
  CHECK(value > 0.05);

  Op h;
  REQUIRE(pl_operator_gate("H", targets, 1, 2, 1, &h.ptr) == PL_OK);
  REQUIRE(pl_cohering_power(h.ptr, 4, 0, &value) == PL_OK);
  CHECK(value >= 1 - 1e-9);

  Op unknown;
  CHECK(pl_operator_gate("NOPE", targets, 1, 2, 1, &unknown.ptr) == PL_ERR_ARGUMENT);
}

TEST_CASE("error codes") {
  const double re[] = {2, 0, 0, 0};
  Op m;
  REQUIRE(pl_operator_new(2, 1, re, nullptr, &m.ptr) == PL_OK);
  double value = 0;
  CHECK(pl_circuit_sensitivity(m.ptr, &value) == PL_ERR_ARGUMENT);
  CHECK(pl_influence(m.ptr, &value) == PL_ERR_NORMALIZATION);
  CHECK(pl_influence(nullptr, &value) == PL_ERR_ARGUMENT);
  CHECK(pl_set_threads(0) == PL_ERR_ARGUMENT);
  CHECK(pl_set_threads(1) == PL_OK);

  Op from_json;
  CHECK(pl_operator_from_json("{not json", &from_json.ptr) == PL_ERR_INPUT);
  CHECK(pl_operator_from_json(R"({"d":2,"n":13,"re":[]})", &from_json.ptr) == PL_ERR_RESOURCE);

  const double plus[] = {0.5, 0.5, 0.5, 0.5};
  Op rho;
  REQUIRE(pl_operator_new(2, 1, plus, nullptr, &rho.ptr) == PL_OK);
  REQUIRE(pl_rel_entropy_coherence(rho.ptr, &value) == PL_OK);
  CHECK_THAT(value, WithinAbs(1, 1e-12));
}

TEST_CASE("reports are JSON with the schema tag") {
  Op o;
  REQUIRE(pl_operator_from_json(R"({"gate":"CNOT","targets":[0,1]})", &o.ptr) == PL_OK);
  char* out = nullptr;
  REQUIRE(pl_report_classify(o.ptr, 1e-8, &out) == PL_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["schema"] == "pauli-lens/1");
  CHECK(j["clifford"] == true);
  REQUIRE(pl_report_cis(o.ptr, &out) == PL_OK);
  CHECK_THAT(nlohmann::json::parse(take(out))["cis"]["value"].get<double>(), WithinAbs(1, 1e-9));
}

TEST_CASE("paths, certificates and audits") {
  pl_path* path = nullptr;
  REQUIRE(pl_path_from_json(read_fixture("cnot_path.json").c_str(), 1, &path) == PL_OK);
  double cost = 0;
  REQUIRE(pl_path_cost(path, &cost) == PL_OK);
  CHECK_THAT(cost, WithinAbs(3 * 0.7853981633974483, 1e-12));
  Op u;
  REQUIRE(pl_path_compile(path, &u.ptr) == PL_OK);
  double cis = 0;
  REQUIRE(pl_circuit_sensitivity(u.ptr, &cis) == PL_OK);
  CHECK_THAT(cis, WithinAbs(1, 1e-9));

  char* report = nullptr;
  REQUIRE(pl_report_certificate(path, 4, 0, &report) == PL_OK);
  const std::string text = take(report);
  CHECK(nlohmann::json::parse(text)["all_bounds_hold"] == true);
  int violation = -1;
  char* problems = nullptr;
  REQUIRE(pl_audit_report(text.c_str(), &violation, &problems) == PL_OK);
  CHECK(violation == 0);
  take(problems);
  pl_path_free(path);

  REQUIRE(pl_audit_report(read_fixture("corrupted_certificate.json").c_str(), &violation,
                          &problems) == PL_OK);
  CHECK(violation == 1);
  CHECK(nlohmann::json::parse(take(problems))["problems"].size() >= 1);

  CHECK(pl_path_from_json(R"({"d":2,"n":1,"segments":[{"duration":1,"terms":[
      {"support":[0],"h":{"d":2,"n":1,"re":[[2,0],[0,-2]]},"r":1}]}]})",
                          1, &path) == PL_ERR_ARGUMENT);
  REQUIRE(pl_path_from_json(R"({"d":2,"n":1,"segments":[{"duration":1,"terms":[
      {"support":[0],"h":{"d":2,"n":1,"re":[[2,0],[0,-2]]},"r":1}]}]})",
                            0, &path) == PL_OK);
  char* warnings = nullptr;
  REQUIRE(pl_path_warnings(path, &warnings) == PL_OK);
  CHECK(nlohmann::json::parse(take(warnings)).size() == 1);
  pl_path_free(path);
}
