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

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/coherence.hpp"
#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/gates.hpp"
#include "core/gaussian.hpp"
#include "core/json_io.hpp"
#include "core/magic.hpp"
#include "core/otoc.hpp"
#include "core/reports.hpp"
#include "core/sensitivity.hpp"
#include "core/spectrum.hpp"
#include "paulilens.h"

struct pl_operator {
  paulilens::Operator op;
};

struct pl_path {
  paulilens::CircuitPath path;
};

namespace {

thread_local std::string g_last_error;

pl_status fail(pl_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
pl_status guarded(Fn&& fn) {
  using namespace paulilens;
  try {
    fn();
    g_last_error.clear();
    return PL_OK;
  } catch (const NormalizationError& e) {
    return fail(PL_ERR_NORMALIZATION, e.what());
  } catch (const ArgumentError& e) {
    return fail(PL_ERR_ARGUMENT, e.what());
  } catch (const ResourceError& e) {
    return fail(PL_ERR_RESOURCE, e.what());
  } catch (const ConvergenceError& e) {
    return fail(PL_ERR_CONVERGENCE, e.what());
  } catch (const SupportError& e) {
    return fail(PL_ERR_SUPPORT, e.what());
  } catch (const SingularStateError& e) {
    return fail(PL_ERR_SINGULAR_STATE, e.what());
  } catch (const InputError& e) {
    return fail(PL_ERR_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PL_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(PL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PL_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw paulilens::ArgumentError(std::string(what) + " must not be null");
}

template <typename Fn>
pl_status scalar(const pl_operator* op, double* out, Fn&& fn) {
  return guarded([&] {
    require(op, "operator");
    require(out, "out");
    *out = fn(op->op);
  });
}

template <typename Fn>
pl_status report(const pl_operator* op, char** out, Fn&& fn) {
  return guarded([&] {
    require(op, "operator");
    require(out, "out");
    *out = copy_string(fn(op->op).dump());
  });
}

}  // namespace

extern "C" {

const char* pl_version(void) { return "0.1.0"; }

const char* pl_last_error(void) { return g_last_error.c_str(); }

const char* pl_status_name(pl_status status) {
  switch (status) {
    case PL_OK: return "ok";
    case PL_ERR_ARGUMENT: return "argument error";
    case PL_ERR_RESOURCE: return "resource error";
    case PL_ERR_NORMALIZATION: return "normalization error";
    case PL_ERR_CONVERGENCE: return "convergence error";
    case PL_ERR_SUPPORT: return "support error";
    case PL_ERR_SINGULAR_STATE: return "singular state error";
    case PL_ERR_INPUT: return "input error";
    default: return "internal error";
  }
}

void pl_string_free(char* s) { delete[] s; }

pl_status pl_set_threads(int threads) {
  return guarded([&] { paulilens::set_thread_count(threads); });
}

pl_status pl_set_dimension_cap(int64_t cap) {
  return guarded([&] { paulilens::set_dimension_cap(cap); });
}

pl_status pl_operator_new(int d, int n, const double* re, const double* im,
                          pl_operator** out) {
  return guarded([&] {
    require(re, "re");
    require(out, "out");
    const std::int64_t dim = paulilens::checked_dim(d, n);
    paulilens::Matrix m(dim, dim);
    for (std::int64_t r = 0; r < dim; ++r)
      for (std::int64_t c = 0; c < dim; ++c)
        m(r, c) = paulilens::Complex(re[r * dim + c], im ? im[r * dim + c] : 0.0);
    *out = new pl_operator{paulilens::Operator(d, n, std::move(m))};
  });
}

pl_status pl_operator_from_json(const char* json, pl_operator** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new pl_operator{paulilens::operator_from_json(paulilens::parse_json(json))};
  });
}

pl_status pl_operator_gate(const char* name, const int* targets, int num_targets, int d,
                           int n, pl_operator** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    if (num_targets < 0 || (num_targets > 0 && targets == nullptr))
      throw paulilens::ArgumentError("invalid target list");
    std::vector<int> t(targets, targets + num_targets);
    *out = new pl_operator{paulilens::named_gate(name, t, d, n)};
  });
}

void pl_operator_free(pl_operator* op) { delete op; }

pl_status pl_operator_dims(const pl_operator* op, int* d, int* n) {
  return guarded([&] {
    require(op, "operator");
    if (d) *d = op->op.d();
    if (n) *n = op->op.n();
  });
}

pl_status pl_operator_to_json(const pl_operator* op, char** out) {
  return report(op, out, [](const auto& o) { return paulilens::operator_to_json(o); });
}

pl_status pl_influence(const pl_operator* o, double* out) {
  return scalar(o, out, [](const auto& x) {
    return paulilens::influence_total(paulilens::pauli_spectrum(x));
  });
}

pl_status pl_fourier_entropy(const pl_operator* o, double* out) {
  return scalar(o, out, [](const auto& x) {
    return paulilens::fourier_entropy(paulilens::pauli_spectrum(x));
  });
}

pl_status pl_circuit_sensitivity(const pl_operator* u, double* out) {
  return scalar(u, out, [](const auto& x) { return paulilens::circuit_sensitivity(x).value; });
}

pl_status pl_gaussian_circuit_sensitivity(const pl_operator* u, double* out) {
  return scalar(u, out, [](const auto& x) {
    return paulilens::gaussian_circuit_sensitivity(x).value;
  });
}

pl_status pl_is_stable(const pl_operator* u, double tol, int* out) {
  return guarded([&] {
    require(u, "operator");
    require(out, "out");
    *out = paulilens::is_stable(u->op, tol) ? 1 : 0;
  });
}

pl_status pl_is_matchgate(const pl_operator* u, double tol, int* out) {
  return guarded([&] {
    require(u, "operator");
    require(out, "out");
    *out = paulilens::is_matchgate(u->op, tol) ? 1 : 0;
  });
}

pl_status pl_magic_entropy(const pl_operator* u, double* out) {
  return scalar(u, out, [](const auto& x) { return paulilens::magic_entropy(x); });
}

pl_status pl_magic_power(const pl_operator* u, int restarts, uint64_t seed, double* out) {
  return scalar(u, out, [&](const auto& x) {
    return paulilens::magic_power_search(x, restarts, seed).value;
  });
}

pl_status pl_cohering_power(const pl_operator* u, int restarts, uint64_t seed,
                            double* out) {
  return scalar(u, out, [&](const auto& x) {
    return paulilens::cohering_power_search(x, restarts, seed).value;
  });
}

pl_status pl_rel_entropy_coherence(const pl_operator* rho, double* out) {
  return scalar(rho, out, [](const auto& x) { return paulilens::rel_entropy_coherence(x); });
}

pl_status pl_otoc(const pl_operator* u, const pl_operator* o_d, const pl_operator* o_a,
                  double* out) {
  return guarded([&] {
    require(u, "u");
    require(o_d, "o_d");
    require(o_a, "o_a");
    require(out, "out");
    *out = paulilens::otoc(u->op, o_d->op, o_a->op);
  });
}

pl_status pl_report_spectrum(const pl_operator* o, char** out) {
  return report(o, out, [](const auto& x) { return paulilens::report_spectrum(x); });
}

pl_status pl_report_influence(const pl_operator* o, char** out) {
  return report(o, out, [](const auto& x) { return paulilens::report_influence(x); });
}

pl_status pl_report_cis(const pl_operator* u, char** out) {
  return report(u, out, [](const auto& x) { return paulilens::report_cis(x); });
}

pl_status pl_report_cis_gaussian(const pl_operator* u, char** out) {
  return report(u, out, [](const auto& x) { return paulilens::report_cis_gaussian(x); });
}

pl_status pl_report_classify(const pl_operator* u, double tol, char** out) {
  return report(u, out, [&](const auto& x) { return paulilens::report_classify(x, tol); });
}

pl_status pl_report_magic(const pl_operator* u, int restarts, uint64_t seed, char** out) {
  return report(u, out,
                [&](const auto& x) { return paulilens::report_magic(x, restarts, seed); });
}

pl_status pl_report_coherence(const pl_operator* x, int restarts, uint64_t seed,
                              char** out) {
  return report(x, out, [&](const auto& o) {
    return paulilens::report_coherence(o, restarts, seed);
  });
}

pl_status pl_report_otoc(const pl_operator* o, int k, int m, char** out) {
  return report(o, out, [&](const auto& x) { return paulilens::report_otoc(x, k, m); });
}

pl_status pl_report_wigner(const pl_operator* o, char** out) {
  return report(o, out, [](const auto& x) { return paulilens::report_wigner(x); });
}

pl_status pl_path_from_json(const char* json, int strict, pl_path** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new pl_path{paulilens::path_from_json(paulilens::parse_json(json), strict != 0)};
  });
}

void pl_path_free(pl_path* path) { delete path; }

pl_status pl_path_cost(const pl_path* path, double* out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = paulilens::path_cost(path->path);
  });
}

pl_status pl_path_compile(const pl_path* path, pl_operator** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new pl_operator{paulilens::compile_unitary(path->path)};
  });
}

pl_status pl_path_warnings(const pl_path* path, char** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = copy_string(paulilens::Json(path->path.warnings).dump());
  });
}

pl_status pl_report_certificate(const pl_path* path, int restarts, uint64_t seed,
                                char** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    paulilens::CertificateOptions opts;
    opts.restarts = restarts;
    opts.seed = seed;
    *out = copy_string(paulilens::report_certificate(path->path, opts).dump());
  });
}

pl_status pl_audit_report(const char* json, int* violation, char** out) {
  return guarded([&] {
    require(json, "json");
    require(violation, "violation");
    const paulilens::AuditResult r = paulilens::audit_report(paulilens::parse_json(json));
    *violation = r.violation ? 1 : 0;
    if (out)
      *out = copy_string(paulilens::Json{{"schema", paulilens::kSchema},
                                         {"kind", "audit"},
                                         {"violation", r.violation},
                                         {"problems", r.problems}}
                             .dump());
  });
}

}  // extern "C"
