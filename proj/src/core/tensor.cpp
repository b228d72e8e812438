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

#include "core/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "core/config.hpp"
#include "core/errors.hpp"

namespace paulilens {
namespace {

std::vector<std::int64_t> powers(int d, int count) {
  std::vector<std::int64_t> p(count + 1, 1);
  for (int i = 1; i <= count; ++i) p[i] = p[i - 1] * d;
  return p;
}

std::vector<Complex> roots_of_unity(int d) {
  std::vector<Complex> w(d);
  for (int k = 0; k < d; ++k)
    w[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  return w;
}

// Digits of every basis index, qudit 0 first.
std::vector<int> digit_table(int d, int n, std::int64_t dim) {
  std::vector<int> digits(static_cast<std::size_t>(dim) * n);
  for (std::int64_t x = 0; x < dim; ++x) {
    std::int64_t r = x;
    for (int i = n - 1; i >= 0; --i) {
      digits[x * n + i] = static_cast<int>(r % d);
      r /= d;
    }
  }
  return digits;
}

// In place d-ary DFT over every digit: v[y] <- sum_x w^{sign y.x} v[x].
void dft_digits(Vector& v, int d, int n, int sign) {
  const auto w = roots_of_unity(d);
  const std::int64_t dim = v.size();
  std::vector<Complex> in(d), out(d);
  std::int64_t stride = 1;
  for (int i = n - 1; i >= 0; --i, stride *= d) {
    const std::int64_t block = stride * d;
    for (std::int64_t hi = 0; hi < dim; hi += block) {
      for (std::int64_t lo = 0; lo < stride; ++lo) {
        const std::int64_t base = hi + lo;
        if (d == 2) {
          const Complex a = v[base], b = v[base + stride];
          v[base] = a + b;
          v[base + stride] = a - b;
          continue;
        }
        for (int k = 0; k < d; ++k) in[k] = v[base + k * stride];
        for (int j = 0; j < d; ++j) {
          Complex acc = 0;
          for (int k = 0; k < d; ++k) {
            int e = (j * k) % d;
            if (sign < 0) e = (d - e) % d;
            acc += w[e] * in[k];
          }
          out[j] = acc;
        }
        for (int k = 0; k < d; ++k) v[base + k * stride] = out[k];
      }
    }
  }
}

// Pauli-code contributions of basis-indexed s and t digit strings.
void pauli_parts(int d, int n, std::int64_t dim, std::vector<std::int64_t>& spart,
                 std::vector<std::int64_t>& tpart) {
  const auto pw = powers(d, 2 * n);
  spart.assign(dim, 0);
  tpart.assign(dim, 0);
  for (std::int64_t x = 0; x < dim; ++x) {
    std::int64_t r = x;
    for (int i = n - 1; i >= 0; --i) {
      const int digit = static_cast<int>(r % d);
      r /= d;
      spart[x] += digit * pw[2 * i];
      tpart[x] += digit * pw[2 * i + 1];
    }
  }
}

std::int64_t shifted_index(const int* col_digits, const int* s_digits, int d,
                           int n) {
  std::int64_t row = 0;
  for (int i = 0; i < n; ++i) row = row * d + (col_digits[i] + s_digits[i]) % d;
  return row;
}

std::vector<int> positions_of(SubsetMask mask, int n, bool inside) {
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if (((mask >> j) & 1u) == (inside ? 1u : 0u)) out.push_back(j);
  return out;
}

}  // namespace

std::int64_t checked_dim(int d, int k) {
  if (d < 2) throw ArgumentError("local dimension must be at least 2");
  if (k < 0) throw ArgumentError("qudit count must be non-negative");
  const std::int64_t cap = dimension_cap();
  std::int64_t dim = 1;
  for (int i = 0; i < k; ++i) {
    dim *= d;
    if (dim > cap)
      throw ResourceError("dimension " + std::to_string(d) + "^" +
                          std::to_string(k) + " exceeds cap " +
                          std::to_string(cap));
  }
  return dim;
}

Operator::Operator(int d, int n)
    : d_(d), n_(n), entries_(Matrix::Zero(checked_dim(d, n), checked_dim(d, n))) {}

Operator::Operator(int d, int n, Matrix entries)
    : d_(d), n_(n), entries_(std::move(entries)) {
  const std::int64_t dim = checked_dim(d, n);
  if (entries_.rows() != dim || entries_.cols() != dim)
    throw ArgumentError("matrix side must equal d^n = " + std::to_string(dim));
}

Operator Operator::identity(int d, int n) {
  const std::int64_t dim = checked_dim(d, n);
  return Operator(d, n, Matrix::Identity(dim, dim));
}

Operator Operator::adjoint() const {
  return Operator(d_, n_, entries_.adjoint());
}

Operator Operator::scaled(Complex z) const {
  return Operator(d_, n_, entries_ * z);
}

bool Operator::is_unitary(double tol) const {
  const Matrix g = entries_.adjoint() * entries_;
  return (g - Matrix::Identity(dim(), dim())).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_hermitian(double tol) const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

static void require_same_shape(const Operator& a, const Operator& b) {
  if (!a.same_shape(b))
    throw ArgumentError("operator shapes differ: (d=" + std::to_string(a.d()) +
                        ", n=" + std::to_string(a.n()) + ") vs (d=" +
                        std::to_string(b.d()) + ", n=" + std::to_string(b.n()) +
                        ")");
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_shape(a, b);
  return Operator(a.d_, a.n_, a.entries_ * b.entries_);
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_shape(a, b);
  return Operator(a.d_, a.n_, a.entries_ + b.entries_);
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_shape(a, b);
  return Operator(a.d_, a.n_, a.entries_ - b.entries_);
}

Operator kron(const Operator& a, const Operator& b) {
  if (a.d() != b.d()) throw ArgumentError("kron of different local dimensions");
  const int n = a.n() + b.n();
  checked_dim(a.d(), n);
  const std::int64_t da = a.dim(), db = b.dim();
  Matrix m(da * db, da * db);
  for (std::int64_t i = 0; i < da; ++i)
    for (std::int64_t j = 0; j < da; ++j)
      m.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
  return Operator(a.d(), n, std::move(m));
}

Operator commutator(const Operator& a, const Operator& b) {
  return a * b - b * a;
}

Operator conjugate_by(const Operator& u, const Operator& a) {
  require_same_shape(u, a);
  return Operator(a.d(), a.n(), u.matrix() * a.matrix() * u.matrix().adjoint());
}

int PauliIndex::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < s.size(); ++i) w += (s[i] != 0 || t[i] != 0);
  return w;
}

std::int64_t pauli_count(int d, int n) {
  const std::int64_t dim = checked_dim(d, n);
  return dim * dim;
}

std::int64_t encode_pauli(const PauliIndex& a, int d) {
  if (a.s.size() != a.t.size()) throw ArgumentError("malformed Pauli index");
  std::int64_t code = 0;
  for (int i = a.n() - 1; i >= 0; --i) {
    if (a.s[i] < 0 || a.s[i] >= d || a.t[i] < 0 || a.t[i] >= d)
      throw ArgumentError("Pauli exponents must be reduced mod d");
    code = (code * d + a.t[i]) * d + a.s[i];
  }
  return code;
}

PauliIndex decode_pauli(std::int64_t code, int d, int n) {
  if (code < 0 || code >= pauli_count(d, n))
    throw ArgumentError("Pauli code out of range");
  PauliIndex a;
  a.s.resize(n);
  a.t.resize(n);
  for (int i = 0; i < n; ++i) {
    a.s[i] = static_cast<int>(code % d);
    code /= d;
    a.t[i] = static_cast<int>(code % d);
    code /= d;
  }
  return a;
}

int pauli_weight(std::int64_t code, int d, int n) {
  const std::int64_t dd = static_cast<std::int64_t>(d) * d;
  int w = 0;
  for (int i = 0; i < n; ++i, code /= dd) w += (code % dd) != 0;
  return w;
}

std::vector<int> pauli_weights(int d, int n) {
  const std::int64_t count = pauli_count(d, n);
  std::vector<int> w(count);
  for (std::int64_t a = 0; a < count; ++a) w[a] = pauli_weight(a, d, n);
  return w;
}

std::pair<int, int> pauli_site(std::int64_t code, int d, int j) {
  const std::int64_t dd = static_cast<std::int64_t>(d) * d;
  for (int i = 0; i < j; ++i) code /= dd;
  const int pair = static_cast<int>(code % dd);
  return {pair % d, pair / d};
}

std::int64_t negate_pauli(std::int64_t code, int d, int n) {
  std::int64_t out = 0, place = 1;
  for (int i = 0; i < 2 * n; ++i, place *= d, code /= d)
    out += ((d - code % d) % d) * place;
  return out;
}

std::int64_t add_pauli(std::int64_t a, std::int64_t b, int d, int n) {
  std::int64_t out = 0, place = 1;
  for (int i = 0; i < 2 * n; ++i, place *= d, a /= d, b /= d)
    out += ((a % d + b % d) % d) * place;
  return out;
}

void check_mask(SubsetMask mask, int n) {
  if (n < 32 && (mask >> n) != 0)
    throw ArgumentError("subset mask has bits beyond qudit n-1");
}

Operator pauli_op(const PauliIndex& a, int d, int n) {
  if (a.n() != n || static_cast<int>(a.t.size()) != n)
    throw ArgumentError("Pauli index length differs from n");
  encode_pauli(a, d);  // validates ranges
  const std::int64_t dim = checked_dim(d, n);
  const auto w = roots_of_unity(d);
  Matrix m = Matrix::Zero(dim, dim);
  std::vector<int> col_digits(n);
  for (std::int64_t col = 0; col < dim; ++col) {
    std::int64_t r = col;
    for (int i = n - 1; i >= 0; --i) {
      col_digits[i] = static_cast<int>(r % d);
      r /= d;
    }
    int phase = 0;
    for (int i = 0; i < n; ++i) phase += a.t[i] * col_digits[i];
    m(shifted_index(col_digits.data(), a.s.data(), d, n), col) = w[phase % d];
  }
  return Operator(d, n, std::move(m));
}

Operator pauli_op(std::int64_t code, int d, int n) {
  return pauli_op(decode_pauli(code, d, n), d, n);
}

Complex hs_inner(const Operator& a, const Operator& b) {
  require_same_shape(a, b);
  return (a.matrix().array().conjugate() * b.matrix().array()).sum() /
         static_cast<double>(a.dim());
}

double l2_norm(const Operator& a) {
  return std::sqrt(a.matrix().squaredNorm() / static_cast<double>(a.dim()));
}

static RealVector singular_values(const Matrix& m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-13) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs();
  }
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues();
}

double operator_norm(const Operator& a) {
  if (a.matrix().squaredNorm() == 0.0) return 0.0;
  return singular_values(a.matrix()).maxCoeff();
}

double lp_norm(const Operator& a, double p) {
  if (!(p >= 1.0)) throw ArgumentError("lp_norm requires p >= 1");
  if (std::isinf(p)) return operator_norm(a);
  if (p == 2.0) return l2_norm(a);
  const RealVector sv = singular_values(a.matrix());
  double acc = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) acc += std::pow(sv[i], p);
  return std::pow(acc / static_cast<double>(a.dim()), 1.0 / p);
}

Vector pauli_coefficients(const Operator& o) {
  const int d = o.d(), n = o.n();
  const std::int64_t dim = o.dim();
  std::vector<std::int64_t> spart, tpart;
  pauli_parts(d, n, dim, spart, tpart);
  const auto digits = digit_table(d, n, dim);
  Vector out(dim * dim);
  Vector v(dim);
  const double inv = 1.0 / static_cast<double>(dim);
  for (std::int64_t s = 0; s < dim; ++s) {
    const int* sd = &digits[s * n];
    for (std::int64_t col = 0; col < dim; ++col)
      v[col] = o(shifted_index(&digits[col * n], sd, d, n), col);
    dft_digits(v, d, n, -1);
    for (std::int64_t t = 0; t < dim; ++t) out[spart[s] + tpart[t]] = v[t] * inv;
  }
  return out;
}

Operator operator_from_coefficients(const Vector& c, int d, int n) {
  const std::int64_t dim = checked_dim(d, n);
  if (c.size() != dim * dim)
    throw ArgumentError("coefficient vector must have d^{2n} entries");
  std::vector<std::int64_t> spart, tpart;
  pauli_parts(d, n, dim, spart, tpart);
  const auto digits = digit_table(d, n, dim);
  Matrix m = Matrix::Zero(dim, dim);
  Vector v(dim);
  for (std::int64_t s = 0; s < dim; ++s) {
    for (std::int64_t t = 0; t < dim; ++t) v[t] = c[spart[s] + tpart[t]];
    dft_digits(v, d, n, +1);
    const int* sd = &digits[s * n];
    for (std::int64_t col = 0; col < dim; ++col)
      m(shifted_index(&digits[col * n], sd, d, n), col) = v[col];
  }
  return Operator(d, n, std::move(m));
}

std::vector<std::int64_t> digit_offsets(int d, int n,
                                        const std::vector<int>& positions) {
  const auto pw = powers(d, n);
  const int k = static_cast<int>(positions.size());
  const std::int64_t count = checked_dim(d, k);
  std::vector<std::int64_t> out(count, 0);
  for (std::int64_t x = 0; x < count; ++x) {
    std::int64_t r = x;
    for (int i = k - 1; i >= 0; --i) {
      out[x] += (r % d) * pw[n - 1 - positions[i]];
      r /= d;
    }
  }
  return out;
}

Operator partial_trace(const Operator& a, SubsetMask keep) {
  const int d = a.d(), n = a.n();
  check_mask(keep, n);
  const auto kept = positions_of(keep, n, true);
  const auto traced = positions_of(keep, n, false);
  const auto kofs = digit_offsets(d, n, kept);
  const auto tofs = digit_offsets(d, n, traced);
  const std::int64_t kd = kofs.size();
  Matrix m = Matrix::Zero(kd, kd);
  for (std::int64_t tau : tofs)
    for (std::int64_t c = 0; c < kd; ++c)
      for (std::int64_t r = 0; r < kd; ++r) m(r, c) += a(kofs[r] + tau, kofs[c] + tau);
  return Operator(d, static_cast<int>(kept.size()), std::move(m));
}

Operator embed(const Operator& local, const std::vector<int>& support, int n) {
  const int d = local.d();
  if (static_cast<int>(support.size()) != local.n())
    throw ArgumentError("support size differs from the local qudit count");
  std::vector<bool> used(n, false);
  for (int j : support) {
    if (j < 0 || j >= n) throw ArgumentError("support index out of range");
    if (used[j]) throw ArgumentError("support indices must be distinct");
    used[j] = true;
  }
  std::vector<int> rest;
  for (int j = 0; j < n; ++j)
    if (!used[j]) rest.push_back(j);
  const auto kofs = digit_offsets(d, n, support);
  const auto tofs = digit_offsets(d, n, rest);
  const std::int64_t kd = kofs.size();
  const std::int64_t dim = checked_dim(d, n);
  Matrix m = Matrix::Zero(dim, dim);
  for (std::int64_t tau : tofs)
    for (std::int64_t c = 0; c < kd; ++c)
      for (std::int64_t r = 0; r < kd; ++r) m(kofs[r] + tau, kofs[c] + tau) = local(r, c);
  return Operator(d, n, std::move(m));
}

bool is_supported_on(const Operator& a, SubsetMask support, double tol) {
  const int n = a.n();
  check_mask(support, n);
  const auto kept = positions_of(support, n, true);
  const Operator reduced = partial_trace(a, support);
  const double scale =
      1.0 / static_cast<double>(checked_dim(a.d(), n - static_cast<int>(kept.size())));
  Operator recon = kept.empty()
                       ? Operator::identity(a.d(), n).scaled(reduced(0, 0) * scale)
                       : embed(reduced.scaled(scale), kept, n);
  const Matrix diff = a.matrix() - recon.matrix();
  // ||.||_inf lies between the normalized and unnormalized Frobenius norms.
  const double frob = diff.norm();
  if (frob <= tol) return true;
  if (frob / std::sqrt(static_cast<double>(a.dim())) > tol) return false;
  return operator_norm(Operator(a.d(), n, diff)) <= tol;
}

SubsetMask support_of(const Operator& a, double tol) {
  const int n = a.n();
  const SubsetMask all = n >= 32 ? ~0u : ((1u << n) - 1u);
  SubsetMask out = 0;
  for (int j = 0; j < n; ++j)
    if (!is_supported_on(a, all & ~(1u << j), tol)) out |= 1u << j;
  return out;
}

void check_state(const Operator& rho, double tol) {
  if (!rho.is_hermitian(std::max(tol, 1e-9)))
    throw ArgumentError("density operator must be Hermitian");
  if (std::abs(rho.trace() - 1.0) > tol)
    throw ArgumentError("density operator must have unit trace");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw ArgumentError("density operator must be positive semidefinite");
}

double avg_renyi2_entanglement(const Operator& rho) {
  check_state(rho, 1e-8);
  const int n = rho.n();
  const SubsetMask subsets = 1u << n;
  double acc = 0;
  for (SubsetMask mask = 0; mask < subsets; ++mask) {
    const Operator marginal = partial_trace(rho, mask);
    acc -= std::log2(marginal.matrix().squaredNorm());
  }
  return acc / static_cast<double>(subsets);
}

}  // namespace paulilens
