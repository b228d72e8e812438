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

#include "core/tensor.hpp"

namespace paulilens {

struct CorrelatorReport {
  double lhs = 0;  // direct enumeration
  double rhs = 0;  // closed form
  double abs_err = 0;
};

/// (1/2) ||[U O_D U^\dagger, O_A]||_2^2.
double otoc(const Operator& u, const Operator& o_d, const Operator& o_a);

double binomial(int n, int k);

/// First displayed form: sum_j (-1)^j (q-1)^{m-j} C(x,j) C(n-x,m-j).
double krawtchouk(int m, int x, int n, int q);
/// Second form: sum_j (-q)^j (q-1)^{m-j} C(n-j,m-j) C(x,j).
double krawtchouk_alt(int m, int x, int n, int q);

// In all averages below the region D holds the trailing k qudits and the
// probes O_A are Paulis on the leading N = n - k qudits.

/// Mean of <O^\dagger P^\dagger O P> over the (n-1)(d^2-1) weight-one Paulis
/// P on the first n-1 qudits.
double avg_otoc_weight1_oracle(const Operator& o_dt);
/// 1 - d^2/(d^2-1) * mean_{j<n-1} I_j[O].
double avg_otoc_weight1_closed_form(const Operator& o_dt);
CorrelatorReport avg_otoc_weight1(const Operator& o_dt);

/// Qubits. Mean of <O^\dagger P O P> over all weight-m Paulis supported on
/// [N]; closed form via the generalized influences I^{(j)}.
double avg_4pt_weight_m_oracle(const Operator& o_dt, int k, int m);
double avg_4pt_weight_m_closed_form(const Operator& o_dt, int k, int m);
CorrelatorReport avg_4pt_weight_m(const Operator& o_dt, int k, int m);

/// Qubits. Mean of <(O P)^4> over the same probe set.
double avg_8pt_oracle(const Operator& o_dt, int k, int m);
/// Closed form with the Pauli product phases kept:
/// sum_e F(e) K_m(|e restricted to [N]|; N, 4) / (3^m C(N, m)) where
/// F(e) = sum_{a,b} h_a h_b h_{a+e} h_{b+e} phase(a,b) phase(a+e,b+e).
double avg_8pt_closed_form(const Operator& o_dt, int k, int m);
/// The same Krawtchouk average taken over the spectrum of the convolution
/// O*O and scaled by ||O*O||_2^2. Agrees with the closed form when the Pauli
/// support of O is mutually commuting.
double avg_8pt_wigner(const Operator& o_dt, int k, int m);
CorrelatorReport avg_8pt(const Operator& o_dt, int k, int m);

}  // namespace paulilens
