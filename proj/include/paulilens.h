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

/* C interface to pauli-lens.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a pl_status; on failure pl_last_error() gives a
 * message for the calling thread. Strings returned through char** are owned
 * by the caller and released with pl_string_free.
 */
#ifndef PAULILENS_H_
#define PAULILENS_H_

#include <stdint.h>

#if defined(PAULILENS_BUILDING_LIBRARY)
#define PL_API __attribute__((visibility("default")))
#else
#define PL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pl_status {
  PL_OK = 0,
  PL_ERR_ARGUMENT = 1,
  PL_ERR_RESOURCE = 2,
  PL_ERR_NORMALIZATION = 3,
  PL_ERR_CONVERGENCE = 4,
  PL_ERR_SUPPORT = 5,
  PL_ERR_SINGULAR_STATE = 6,
  PL_ERR_INPUT = 7,
  PL_ERR_INTERNAL = 99
} pl_status;

typedef struct pl_operator pl_operator;
typedef struct pl_path pl_path;

PL_API const char* pl_version(void);
PL_API const char* pl_last_error(void);
PL_API const char* pl_status_name(pl_status status);
PL_API void pl_string_free(char* s);

/* Global settings. */
PL_API pl_status pl_set_threads(int threads);
PL_API pl_status pl_set_dimension_cap(int64_t cap);

/* Operators. Matrices are row-major with d^n * d^n entries. */
PL_API pl_status pl_operator_new(int d, int n, const double* re, const double* im,
                                 pl_operator** out);
PL_API pl_status pl_operator_from_json(const char* json, pl_operator** out);
PL_API pl_status pl_operator_gate(const char* name, const int* targets, int num_targets,
                                  int d, int n, pl_operator** out);
PL_API void pl_operator_free(pl_operator* op);
PL_API pl_status pl_operator_dims(const pl_operator* op, int* d, int* n);
PL_API pl_status pl_operator_to_json(const pl_operator* op, char** out);

/* Scalar diagnostics. Operators that need unit l2 norm must already have it. */
PL_API pl_status pl_influence(const pl_operator* o, double* out);
PL_API pl_status pl_fourier_entropy(const pl_operator* o, double* out);
PL_API pl_status pl_circuit_sensitivity(const pl_operator* u, double* out);
PL_API pl_status pl_gaussian_circuit_sensitivity(const pl_operator* u, double* out);
PL_API pl_status pl_is_stable(const pl_operator* u, double tol, int* out);
PL_API pl_status pl_is_matchgate(const pl_operator* u, double tol, int* out);
PL_API pl_status pl_magic_entropy(const pl_operator* u, double* out);
PL_API pl_status pl_magic_power(const pl_operator* u, int restarts, uint64_t seed,
                                double* out);
PL_API pl_status pl_cohering_power(const pl_operator* u, int restarts, uint64_t seed,
                                   double* out);
PL_API pl_status pl_rel_entropy_coherence(const pl_operator* rho, double* out);
PL_API pl_status pl_otoc(const pl_operator* u, const pl_operator* o_d,
                         const pl_operator* o_a, double* out);

/* JSON reports ("schema": "pauli-lens/1"). Inputs needing unit norm are
 * rescaled and the measured norm is recorded. */
PL_API pl_status pl_report_spectrum(const pl_operator* o, char** out);
PL_API pl_status pl_report_influence(const pl_operator* o, char** out);
PL_API pl_status pl_report_cis(const pl_operator* u, char** out);
PL_API pl_status pl_report_cis_gaussian(const pl_operator* u, char** out);
PL_API pl_status pl_report_classify(const pl_operator* u, double tol, char** out);
PL_API pl_status pl_report_magic(const pl_operator* u, int restarts, uint64_t seed,
                                 char** out);
PL_API pl_status pl_report_coherence(const pl_operator* x, int restarts, uint64_t seed,
                                     char** out);
PL_API pl_status pl_report_otoc(const pl_operator* o, int k, int m, char** out);
PL_API pl_status pl_report_wigner(const pl_operator* o, char** out);

/* Circuit paths and cost certificates. */
PL_API pl_status pl_path_from_json(const char* json, int strict, pl_path** out);
PL_API void pl_path_free(pl_path* path);
PL_API pl_status pl_path_cost(const pl_path* path, double* out);
PL_API pl_status pl_path_compile(const pl_path* path, pl_operator** out);
/* JSON array of the rescaling warnings raised while loading. */
PL_API pl_status pl_path_warnings(const pl_path* path, char** out);
PL_API pl_status pl_report_certificate(const pl_path* path, int restarts, uint64_t seed,
                                       char** out);
/* Audits a certificate report. *violation is 1 when a bound or consistency
 * check fails; out receives a JSON object listing the problems. */
PL_API pl_status pl_audit_report(const char* json, int* violation, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PAULILENS_H_ */
