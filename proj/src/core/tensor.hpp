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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace paulilens {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// d^k, raising ResourceError when it would exceed the configured cap.
std::int64_t checked_dim(int d, int k);

/// Dense operator on (C^d)^{\otimes n}. Qudit 0 is the leftmost tensor factor,
/// i.e. the most significant digit of a basis index.
class Operator {
 public:
  Operator(int d, int n);  // zero operator
  Operator(int d, int n, Matrix entries);

  static Operator identity(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  std::int64_t dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(std::int64_t r, std::int64_t c) const {
    return entries_(r, c);
  }

  Operator adjoint() const;
  Operator scaled(Complex z) const;
  Complex trace() const { return entries_.trace(); }

  bool is_unitary(double tol = 1e-9) const;
  bool is_hermitian(double tol = 1e-9) const;
  bool same_shape(const Operator& other) const {
    return d_ == other.d_ && n_ == other.n_;
  }

  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);

 private:
  int d_;
  int n_;
  Matrix entries_;
};

Operator kron(const Operator& a, const Operator& b);
Operator commutator(const Operator& a, const Operator& b);
/// U A U^\dagger
Operator conjugate_by(const Operator& u, const Operator& a);

/// Pauli label: exponents (s_i, t_i) of X and Z on every qudit.
struct PauliIndex {
  std::vector<int> s;
  std::vector<int> t;

  int n() const { return static_cast<int>(s.size()); }
  int weight() const;
};

/// Number of Pauli labels, d^{2n}.
std::int64_t pauli_count(int d, int n);

/// Mixed-radix code little-endian in (s_0, t_0, s_1, t_1, ...).
std::int64_t encode_pauli(const PauliIndex& a, int d);
PauliIndex decode_pauli(std::int64_t code, int d, int n);
int pauli_weight(std::int64_t code, int d, int n);
/// Weights of every label in code order.
std::vector<int> pauli_weights(int d, int n);
/// (s_j, t_j) of the label with the given code.
std::pair<int, int> pauli_site(std::int64_t code, int d, int j);
/// Code of -a (componentwise negation mod d).
std::int64_t negate_pauli(std::int64_t code, int d, int n);
/// Code of a + b.
std::int64_t add_pauli(std::int64_t a, std::int64_t b, int d, int n);

/// Bitmask over qudits; bit j selects qudit j.
using SubsetMask = std::uint32_t;
void check_mask(SubsetMask mask, int n);

/// \bigotimes_i X^{s_i} Z^{t_i} with X|j> = |j+1>, Z|j> = e^{2 pi i j/d}|j>.
Operator pauli_op(const PauliIndex& a, int d, int n);
Operator pauli_op(std::int64_t code, int d, int n);

/// (1/d^n) Tr(A^\dagger B).
Complex hs_inner(const Operator& a, const Operator& b);

/// Normalized Schatten norm; p = kInf gives the operator norm.
double lp_norm(const Operator& a, double p);
double l2_norm(const Operator& a);
double operator_norm(const Operator& a);

/// All coefficients c_a = (1/d^n) Tr(P_a^\dagger O) in code order.
///
/// For a fixed X-shift s the nonzero entries of P_{(s,t)} sit at
/// (col + s, col) with phase w^{t.col}, so the coefficients for that shift are
/// a d-ary DFT of the shifted diagonal. Total cost O(d^{2n} n d).
Vector pauli_coefficients(const Operator& o);
/// Inverse of pauli_coefficients: O = sum_a c_a P_a.
Operator operator_from_coefficients(const Vector& c, int d, int n);

/// Trace over the qudits outside `keep`. Kept qudits stay in ascending order.
/// An empty mask yields the full trace as a 1x1 operator with n = 0.
Operator partial_trace(const Operator& a, SubsetMask keep);

/// Places `local` on the listed qudits (support[0] is the local operator's
/// leftmost factor) and the identity elsewhere.
Operator embed(const Operator& local, const std::vector<int>& support, int n);

/// Whether `a` equals (its reduction to `support`) tensored with the identity
/// within tol in operator norm.
bool is_supported_on(const Operator& a, SubsetMask support, double tol = 1e-9);
/// Smallest set of qudits outside of which `a` acts as the identity.
SubsetMask support_of(const Operator& a, double tol = 1e-9);

/// Checks Hermiticity, unit trace and positivity; throws ArgumentError.
void check_state(const Operator& rho, double tol = 1e-10);

/// (1/2^n) sum_{A subset [n]} -log2 Tr(rho_A^2).
double avg_renyi2_entanglement(const Operator& rho);

/// Offsets of basis indices restricted to `positions` (listed order, first is
/// most significant) inside the full n-qudit index. Size d^{|positions|}.
std::vector<std::int64_t> digit_offsets(int d, int n,
                                        const std::vector<int>& positions);

}  // namespace paulilens
