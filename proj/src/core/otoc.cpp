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

#include "core/otoc.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/spectrum.hpp"
#include "core/wigner.hpp"

namespace paulilens {
namespace {

void check_region(const Operator& o, int k, int m) {
  if (o.d() != 2) throw ArgumentError("correlator averages are defined for qubits only");
  if (k < 0 || k > o.n()) throw ArgumentError("region size k out of range");
  if (m < 0 || m > o.n() - k) throw ArgumentError("probe weight m out of range");
}

// Qubit labels supported inside [N] with weight exactly m.
std::vector<std::int64_t> probe_labels(int n, int big_n, int m) {
  std::vector<std::int64_t> out;
  const std::int64_t count = pauli_count(2, n);
  for (std::int64_t b = 0; b < count; ++b) {
    bool inside = true;
    for (int j = big_n; j < n; ++j) inside = inside && pauli_site(b, 2, j) == std::pair{0, 0};
    if (inside && pauli_weight(b, 2, n) == m) out.push_back(b);
  }
  return out;
}

// |supp(a) restricted to [N]|
int region_weight(std::int64_t a, int big_n) {
  int w = 0;
  for (int j = 0; j < big_n; ++j) w += pauli_site(a, 2, j) != std::pair{0, 0};
  return w;
}

Complex normalized_trace(const Matrix& m) {
  return m.trace() / static_cast<double>(m.rows());
}

}  // namespace

double otoc(const Operator& u, const Operator& o_d, const Operator& o_a) {
  if (!u.same_shape(o_d) || !u.same_shape(o_a))
    throw ArgumentError("operator shapes differ");
  require_unit_norm(o_d, "O_D");
  require_unit_norm(o_a, "O_A");
  const Operator odt = conjugate_by(u, o_d);
  return 0.5 * std::pow(l2_norm(commutator(odt, o_a)), 2);
}

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

static void check_krawtchouk(int m, int x, int n, int q) {
  if (n < 0 || m < 0 || m > n || x < 0 || x > n || q < 2)
    throw ArgumentError("Krawtchouk arguments out of range");
}

double krawtchouk(int m, int x, int n, int q) {
  check_krawtchouk(m, x, n, q);
  double acc = 0;
  for (int j = 0; j <= m; ++j)
    acc += (j % 2 ? -1.0 : 1.0) * std::pow(q - 1.0, m - j) * binomial(x, j) *
           binomial(n - x, m - j);
  return acc;
}

double krawtchouk_alt(int m, int x, int n, int q) {
  check_krawtchouk(m, x, n, q);
  double acc = 0;
  for (int j = 0; j <= m; ++j)
    acc += std::pow(-double(q), j) * std::pow(q - 1.0, m - j) * binomial(n - j, m - j) *
           binomial(x, j);
  return acc;
}

double avg_otoc_weight1_oracle(const Operator& o) {
  const int d = o.d(), n = o.n();
  if (n < 2) throw ArgumentError("the weight-one average needs n >= 2");
  require_unit_norm(o);
  const Matrix od = o.matrix().adjoint();
  Complex acc = 0;
  int count = 0;
  for (int j = 0; j < n - 1; ++j)
    for (int s = 0; s < d; ++s)
      for (int t = 0; t < d; ++t) {
        if (s == 0 && t == 0) continue;
        PauliIndex a{std::vector<int>(n, 0), std::vector<int>(n, 0)};
        a.s[j] = s;
        a.t[j] = t;
        const Matrix p = pauli_op(a, d, n).matrix();
        acc += normalized_trace(od * p.adjoint() * o.matrix() * p);
        ++count;
      }
  return acc.real() / count;
}

double avg_otoc_weight1_closed_form(const Operator& o) {
  const int d = o.d(), n = o.n();
  if (n < 2) throw ArgumentError("the weight-one average needs n >= 2");
  const PauliSpectrum s = pauli_spectrum(o);
  double sum = 0;
  for (int j = 0; j < n - 1; ++j) sum += influence_local(s, j);
  const double dd = double(d) * d;
  return 1.0 - dd / (dd - 1.0) * sum / (n - 1);
}

CorrelatorReport avg_otoc_weight1(const Operator& o) {
  CorrelatorReport r;
  r.lhs = avg_otoc_weight1_oracle(o);
  r.rhs = avg_otoc_weight1_closed_form(o);
  r.abs_err = std::abs(r.lhs - r.rhs);
  return r;
}

double avg_4pt_weight_m_oracle(const Operator& o, int k, int m) {
  check_region(o, k, m);
  require_unit_norm(o);
  const int n = o.n();
  const Matrix od = o.matrix().adjoint();
  const auto probes = probe_labels(n, n - k, m);
  Complex acc = 0;
  for (std::int64_t b : probes) {
    const Matrix p = pauli_op(b, 2, n).matrix();
    acc += normalized_trace(od * p.adjoint() * o.matrix() * p);
  }
  return acc.real() / static_cast<double>(probes.size());
}

double avg_4pt_weight_m_closed_form(const Operator& o, int k, int m) {
  check_region(o, k, m);
  const int n = o.n(), big_n = n - k;
  const PauliSpectrum s = pauli_spectrum(o);
  double acc = 0;
  for (int j = 0; j <= m; ++j) {
    double influence_j = 0;  // I^{(j)} = sum_a C(|supp a in [N]|, j) P[a]
    for (Eigen::Index a = 0; a < s.probs.size(); ++a)
      influence_j += binomial(region_weight(a, big_n), j) * s.probs[a];
    acc += std::pow(-4.0 / 3.0, j) * binomial(big_n - j, m - j) * influence_j;
  }
  return acc / binomial(big_n, m);
}

CorrelatorReport avg_4pt_weight_m(const Operator& o, int k, int m) {
  CorrelatorReport r;
  r.lhs = avg_4pt_weight_m_oracle(o, k, m);
  r.rhs = avg_4pt_weight_m_closed_form(o, k, m);
  r.abs_err = std::abs(r.lhs - r.rhs);
  return r;
}

double avg_8pt_oracle(const Operator& o, int k, int m) {
  check_region(o, k, m);
  require_unit_norm(o);
  const int n = o.n();
  const auto probes = probe_labels(n, n - k, m);
  Complex acc = 0;
  for (std::int64_t b : probes) {
    const Matrix op = o.matrix() * pauli_op(b, 2, n).matrix();
    const Matrix sq = op * op;
    acc += normalized_trace(sq * sq);
  }
  return acc.real() / static_cast<double>(probes.size());
}

double avg_8pt_closed_form(const Operator& o, int k, int m) {
  check_region(o, k, m);
  require_unit_norm(o);
  const int n = o.n(), big_n = n - k;
  const Vector h = hermitian_coefficients(o);
  const std::int64_t count = h.size();
  std::vector<std::int64_t> nz;
  for (std::int64_t a = 0; a < count; ++a)
    if (std::abs(h[a]) > 1e-15) nz.push_back(a);
  const double norm = std::pow(3.0, m) * binomial(big_n, m);
  Complex acc = 0;
  for (std::int64_t e = 0; e < count; ++e) {
    Complex f = 0;
    for (std::int64_t a : nz) {
      const Complex ha = h[a] * h[a ^ e];
      if (ha == Complex(0)) continue;
      for (std::int64_t b : nz) {
        const Complex hb = h[b] * h[b ^ e];
        if (hb == Complex(0)) continue;
        f += ha * hb * hermitian_product_phase(a, b, n) *
             hermitian_product_phase(a ^ e, b ^ e, n);
      }
    }
    acc += f * krawtchouk(m, region_weight(e, big_n), big_n, 4);
  }
  return acc.real() / norm;
}

double avg_8pt_wigner(const Operator& o, int k, int m) {
  check_region(o, k, m);
  require_unit_norm(o);
  const int n = o.n(), big_n = n - k;
  const Operator conv = convolve(o, o);
  const double scale = std::pow(l2_norm(conv), 2);
  if (scale == 0) return 0;
  const PauliSpectrum s = pauli_spectrum(conv.scaled(1.0 / std::sqrt(scale)));
  double acc = 0;
  for (Eigen::Index e = 0; e < s.probs.size(); ++e)
    acc += s.probs[e] * krawtchouk(m, region_weight(e, big_n), big_n, 4);
  return scale * acc / (std::pow(3.0, m) * binomial(big_n, m));
}

CorrelatorReport avg_8pt(const Operator& o, int k, int m) {
  CorrelatorReport r;
  r.lhs = avg_8pt_oracle(o, k, m);
  r.rhs = avg_8pt_closed_form(o, k, m);
  r.abs_err = std::abs(r.lhs - r.rhs);
  return r;
}

}  // namespace paulilens
