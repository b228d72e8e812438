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

// pauli-lens command-line front end. Talks to the library only through the
// C interface in paulilens.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "paulilens.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

struct Options {
  std::string input;
  std::string format = "json";
  std::uint64_t seed = 0;
  int restarts = 64;
  double tol = 1e-8;
  int threads = 1;
  int k = 1;
  int m = 1;
  bool strict = false;
};

// Thrown after a library call fails; carries the message already formatted.
struct CliError {
  std::string message;
};

void check(pl_status status) {
  if (status != PL_OK)
    throw CliError{std::string(pl_status_name(status)) + ": " + pl_last_error()};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw CliError{"cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string take(char* s) {
  std::string out(s);
  pl_string_free(s);
  return out;
}

void emit(const std::string& report_json, const std::string& format) {
  const Json j = Json::parse(report_json);
  if (format == "csv") {
    const Json flat = j.flatten();
    std::cout << "key,value\n";
    for (const auto& [key, value] : flat.items()) {
      std::cout << key << ',';
      if (value.is_string())
        std::cout << value.get<std::string>();
      else
        std::cout << value.dump();
      std::cout << '\n';
    }
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

class OperatorHandle {
 public:
  explicit OperatorHandle(const std::string& text) {
    check(pl_operator_from_json(text.c_str(), &op_));
  }
  ~OperatorHandle() { pl_operator_free(op_); }
  OperatorHandle(const OperatorHandle&) = delete;
  OperatorHandle& operator=(const OperatorHandle&) = delete;
  const pl_operator* get() const { return op_; }

 private:
  pl_operator* op_ = nullptr;
};

using OperatorReport = std::function<pl_status(const pl_operator*, const Options&, char**)>;

int run_operator_report(const Options& o, const OperatorReport& fn) {
  const OperatorHandle op(read_input(o.input));
  char* out = nullptr;
  check(fn(op.get(), o, &out));
  emit(take(out), o.format);
  return kExitOk;
}

int run_cost_audit(const Options& o) {
  const std::string text = read_input(o.input);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CliError{std::string("input error: invalid JSON: ") + e.what()};
  }
  char* out = nullptr;
  if (j.is_object() && j.contains("kind")) {
    int violation = 0;
    check(pl_audit_report(text.c_str(), &violation, &out));
    emit(take(out), o.format);
    return violation ? kExitViolation : kExitOk;
  }
  pl_path* path = nullptr;
  check(pl_path_from_json(text.c_str(), o.strict ? 1 : 0, &path));
  char* warnings = nullptr;
  if (pl_path_warnings(path, &warnings) == PL_OK) {
    for (const auto& w : Json::parse(take(warnings)))
      std::cerr << "warning: " << w.get<std::string>() << '\n';
  }
  const pl_status status = pl_report_certificate(path, o.restarts, o.seed, &out);
  pl_path_free(path);
  check(status);
  const std::string report = take(out);
  emit(report, o.format);
  return Json::parse(report).at("all_bounds_hold").get<bool>() ? kExitOk : kExitViolation;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "Input JSON file, or - for stdin")->required();
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--seed", o.seed, "Search seed");
  cmd->add_option("--restarts", o.restarts, "Search restarts")->check(CLI::NonNegativeNumber);
  cmd->add_option("--tol", o.tol, "Classification tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pauli-lens: Pauli-spectral diagnostics of quantum operators and circuits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pl_version()));
  Options o;

  struct Entry {
    const char* name;
    const char* help;
    OperatorReport fn;
  };
  const Entry entries[] = {
      {"spectrum", "Pauli spectrum, weights and Fourier entropies",
       [](const pl_operator* x, const Options&, char** out) { return pl_report_spectrum(x, out); }},
      {"influence", "Local and total influence with the entropy-influence check",
       [](const pl_operator* x, const Options&, char** out) { return pl_report_influence(x, out); }},
      {"cis", "Circuit sensitivity of a unitary",
       [](const pl_operator* x, const Options&, char** out) { return pl_report_cis(x, out); }},
      {"cis-gaussian", "Gaussian circuit sensitivity of a qubit unitary",
       [](const pl_operator* x, const Options&, char** out) {
         return pl_report_cis_gaussian(x, out);
       }},
      {"classify", "Clifford / stable / matchgate taxonomy of a unitary",
       [](const pl_operator* x, const Options& opt, char** out) {
         return pl_report_classify(x, opt.tol, out);
       }},
      {"magic", "Magic entropy and a magic power lower bound",
       [](const pl_operator* x, const Options& opt, char** out) {
         return pl_report_magic(x, opt.restarts, opt.seed, out);
       }},
      {"coherence", "Coherence of a state or cohering power of a unitary",
       [](const pl_operator* x, const Options& opt, char** out) {
         return pl_report_coherence(x, opt.restarts, opt.seed, out);
       }},
      {"otoc", "Averaged OTOC identities for an evolved operator",
       [](const pl_operator* x, const Options& opt, char** out) {
         return pl_report_otoc(x, opt.k, opt.m, out);
       }},
      {"wigner", "Discrete Wigner function of a qubit operator",
       [](const pl_operator* x, const Options&, char** out) { return pl_report_wigner(x, out); }},
  };

  std::function<int()> action;
  for (const Entry& e : entries) {
    CLI::App* cmd = app.add_subcommand(e.name, e.help);
    add_common(cmd, o);
    if (std::string(e.name) == "otoc") {
      cmd->add_option("--k", o.k, "Size of the trailing region D");
      cmd->add_option("--m", o.m, "Probe weight");
    }
    OperatorReport fn = e.fn;
    cmd->callback([&action, &o, fn] { action = [&o, fn] { return run_operator_report(o, fn); }; });
  }
  CLI::App* audit = app.add_subcommand(
      "cost-audit", "Certify cost lower bounds for a path, or re-verify a certificate report");
  add_common(audit, o);
  audit->add_flag("--strict", o.strict, "Reject terms with ||h||_inf != 1 instead of rescaling");
  audit->callback([&action, &o] { action = [&o] { return run_cost_audit(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    check(pl_set_threads(o.threads));
    return action();
  } catch (const CliError& e) {
    std::cerr << "pauli-lens: " << e.message << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "pauli-lens: " << e.what() << '\n';
    return kExitInput;
  }
}
