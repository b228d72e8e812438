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

#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/gates.hpp"
#include "core/random.hpp"
#include "core/tensor.hpp"
#include "support/oracles.hpp"

using namespace paulilens;
using Catch::Matchers::WithinAbs;

namespace {

double max_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

Operator bell_state() {
  Matrix psi = Matrix::Zero(4, 1);
  psi(0, 0) = psi(3, 0) = 1 / std::sqrt(2.0);
  return Operator(2, 2, psi * psi.adjoint());
}

}  // namespace

TEST_CASE("Pauli operators follow the shift and clock convention") {
  SECTION("qubit X") {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    CHECK(max_diff(pauli_op(PauliIndex{{1}, {0}}, 2, 1).matrix(), x) == 0);
  }
  SECTION("qutrit Z is diag(1, w, w^2)") {
    const Complex w = std::polar(1.0, 2 * std::numbers::pi / 3);
    Matrix z = Matrix::Zero(3, 3);
    z(0, 0) = 1;
    z(1, 1) = w;
    z(2, 2) = w * w;
    CHECK(max_diff(pauli_op(PauliIndex{{0}, {1}}, 3, 1).matrix(), z) < 1e-15);
  }
  SECTION("qubit XZ") {
    Matrix xz(2, 2);
    xz << 0, -1, 1, 0;
    CHECK(max_diff(pauli_op(PauliIndex{{1}, {1}}, 2, 1).matrix(), xz) < 1e-15);
  }
  SECTION("Z^d is the identity") {
    for (int d : {2, 3, 5}) {
      const Matrix z = pauli_op(PauliIndex{{0}, {1}}, d, 1).matrix();
      CHECK(max_diff(oracle::mpow(z, d), Matrix::Identity(d, d)) < 1e-12);
    }
  }
  SECTION("every label matches the Kronecker-product reference") {
    for (auto [d, n] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
      for (std::int64_t a = 0; a < pauli_count(d, n); ++a) {
        const Operator p = pauli_op(a, d, n);
        REQUIRE(max_diff(p.matrix(), oracle::pauli(a, d, n)) < 1e-13);
        REQUIRE(p.is_unitary());
      }
    }
  }
}

TEST_CASE("Pauli label encoding round-trips") {
  for (auto [d, n] : {std::pair{2, 3}, {3, 2}}) {
    for (std::int64_t a = 0; a < pauli_count(d, n); ++a) {
      const PauliIndex idx = decode_pauli(a, d, n);
      REQUIRE(encode_pauli(idx, d) == a);
      REQUIRE(idx.weight() == pauli_weight(a, d, n));
      REQUIRE(idx.weight() == oracle::weight(a, d, n));
      REQUIRE(add_pauli(a, negate_pauli(a, d, n), d, n) == 0);
    }
  }
  CHECK_THROWS_AS(encode_pauli(PauliIndex{{2}, {0}}, 2), ArgumentError);
}

TEST_CASE("Hilbert-Schmidt inner product") {
  const Operator x = pauli_op(PauliIndex{{1}, {0}}, 2, 1);
  const Operator z = pauli_op(PauliIndex{{0}, {1}}, 2, 1);
  CHECK(std::abs(hs_inner(x, z)) == 0);
  CHECK_THAT(hs_inner(Operator::identity(2, 3), Operator::identity(2, 3)).real(),
             WithinAbs(1, 1e-15));
  CHECK_THROWS_AS(hs_inner(x, Operator::identity(2, 2)), ArgumentError);

  SECTION("Pauli labels are orthonormal (exhaustive)") {
    for (auto [d, n] : {std::pair{2, 3}, {3, 2}}) {
      const std::int64_t c = pauli_count(d, n);
      std::vector<Operator> ps;
      for (std::int64_t a = 0; a < c; ++a) ps.push_back(pauli_op(a, d, n));
      for (std::int64_t a = 0; a < c; ++a)
        for (std::int64_t b = 0; b < c; ++b)
          REQUIRE(std::abs(std::abs(hs_inner(ps[a], ps[b])) - (a == b ? 1.0 : 0.0)) < 1e-12);
    }
  }
  SECTION("conjugate symmetry") {
    Rng rng = stream_rng(1, 0);
    const Operator a = random_unit_operator(3, 2, rng);
    const Operator b = random_unit_operator(3, 2, rng);
    CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-14);
  }
}

TEST_CASE("Pauli products close up to a phase (exhaustive)") {
  for (auto [d, n] : {std::pair{2, 2}, {3, 2}}) {
    const std::int64_t c = pauli_count(d, n);
    for (std::int64_t a = 0; a < c; ++a)
      for (std::int64_t b = 0; b < c; ++b) {
        const Matrix prod = pauli_op(a, d, n).matrix() * pauli_op(b, d, n).matrix();
        const Matrix target = pauli_op(add_pauli(a, b, d, n), d, n).matrix();
        const Complex phase = (target.adjoint() * prod).trace() / static_cast<double>(prod.rows());
        REQUIRE(std::abs(std::abs(phase) - 1) < 1e-12);
        REQUIRE(max_diff(prod, phase * target) < 1e-12);
      }
  }
}

TEST_CASE("Schatten norms") {
  CHECK_THAT(lp_norm(pauli_op(5, 2, 2), 2), WithinAbs(1, 1e-14));
  CHECK_THAT(lp_norm(Operator::identity(3, 2), kInf), WithinAbs(1, 1e-14));
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 2;
  CHECK_THAT(lp_norm(Operator(2, 1, m), 2), WithinAbs(std::sqrt(2.0), 1e-14));
  CHECK_THAT(lp_norm(Operator(2, 1, m), 1), WithinAbs(1.0, 1e-14));
  CHECK_THROWS_AS(lp_norm(Operator(2, 1, m), 0.5), ArgumentError);

  Rng rng = stream_rng(2, 0);
  const Operator a = random_unit_operator(2, 3, rng);
  Eigen::JacobiSVD<Matrix> svd(a.matrix());
  CHECK_THAT(lp_norm(a, kInf), WithinAbs(svd.singularValues()[0], 1e-12));
  double p3 = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    p3 += std::pow(svd.singularValues()[i], 3);
  CHECK_THAT(lp_norm(a, 3), WithinAbs(std::cbrt(p3 / 8), 1e-12));
}

TEST_CASE("fast coefficient transform agrees with full traces") {
  Rng rng = stream_rng(3, 0);
  for (auto [d, n] : {std::pair{2, 1}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
    const std::int64_t dim = checked_dim(d, n);
    const Operator o(d, n, ginibre(dim, dim, rng));
    const Vector fast = pauli_coefficients(o);
    const Vector slow = oracle::coefficients(o.matrix(), d, n);
    REQUIRE((fast - slow).cwiseAbs().maxCoeff() < 1e-12);
    REQUIRE(max_diff(operator_from_coefficients(fast, d, n).matrix(), o.matrix()) < 1e-12);
  }
}

TEST_CASE("Parseval identity in the Pauli basis") {
  Rng rng = stream_rng(4, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = trial % 2 ? 3 : 2;
    const int n = d == 2 ? 1 + trial % 4 : 1 + trial % 3;
    const std::int64_t dim = checked_dim(d, n);
    const Operator a(d, n, ginibre(dim, dim, rng));
    REQUIRE_THAT(std::pow(lp_norm(a, 2), 2), WithinAbs(pauli_coefficients(a).squaredNorm(), 1e-10));
  }
}

TEST_CASE("partial trace") {
  Rng rng = stream_rng(5, 0);
  SECTION("A (x) B keeps A Tr B") {
    const Operator a(2, 1, ginibre(2, 2, rng));
    const Operator b(2, 1, ginibre(2, 2, rng));
    const Operator pt = partial_trace(kron(a, b), 0b01);
    CHECK(max_diff(pt.matrix(), a.matrix() * b.trace()) < 1e-13);
  }
  SECTION("Bell marginal is maximally mixed") {
    CHECK(max_diff(partial_trace(bell_state(), 0b01).matrix(), Matrix::Identity(2, 2) / 2.0) < 1e-15);
  }
  SECTION("trace is preserved and the digit reference agrees") {
    for (int d : {2, 3}) {
      const int n = 3;
      const std::int64_t dim = checked_dim(d, n);
      const Operator a(d, n, ginibre(dim, dim, rng));
      for (SubsetMask keep = 0; keep < 8; ++keep) {
        const Operator pt = partial_trace(a, keep);
        REQUIRE(std::abs(pt.trace() - a.trace()) < 1e-11);
        std::vector<bool> mask(n);
        for (int j = 0; j < n; ++j) mask[j] = (keep >> j) & 1u;
        REQUIRE(max_diff(pt.matrix(), oracle::partial_trace(a.matrix(), d, n, mask)) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(partial_trace(Operator::identity(2, 2), 0b100), ArgumentError);
}

TEST_CASE("embedding places factors in the listed order") {
  Rng rng = stream_rng(6, 0);
  const Operator a(3, 1, ginibre(3, 3, rng));
  CHECK(max_diff(embed(a, {1}, 2).matrix(), kron(Operator::identity(3, 1), a).matrix()) == 0);
  const Operator cnot_rev = embed(gate_local("CNOT", 2), {1, 0}, 2);
  const Operator swap = gate_local("SWAP", 2);
  CHECK(max_diff(cnot_rev.matrix(), (swap * gate_local("CNOT", 2) * swap).matrix()) < 1e-15);
  CHECK_THROWS_AS(embed(a, {0, 1}, 2), ArgumentError);
  CHECK_THROWS_AS(embed(gate_local("SWAP", 2), {1, 1}, 2), ArgumentError);
}

TEST_CASE("support detection by reconstruction") {
  Rng rng = stream_rng(7, 0);
  const Operator h = random_local_hamiltonian(2, 4, {1, 3}, rng);
  CHECK(support_of(h) == 0b1010);
  CHECK(is_supported_on(h, 0b1010));
  CHECK_FALSE(is_supported_on(h, 0b0010));
  CHECK(support_of(Operator::identity(3, 2)) == 0);
}

TEST_CASE("average Renyi-2 entanglement") {
  Rng rng = stream_rng(8, 0);
  SECTION("product pure state") {
    Matrix psi = Matrix::Zero(8, 1);
    psi(0, 0) = 1;
    CHECK_THAT(avg_renyi2_entanglement(Operator(2, 3, psi * psi.adjoint())), WithinAbs(0, 1e-12));
  }
  SECTION("Bell state gives one half") {
    CHECK_THAT(avg_renyi2_entanglement(bell_state()), WithinAbs(0.5, 1e-12));
  }
  SECTION("invariant under local unitaries and swaps") {
    for (int trial = 0; trial < 10; ++trial) {
      const int d = trial % 2 ? 3 : 2;
      const int n = d == 2 ? 2 + trial % 3 : 2 + trial % 2;
      const Operator rho = random_pure_state(d, n, rng);
      const Operator v = random_stable_unitary(d, n, rng);
      REQUIRE_THAT(avg_renyi2_entanglement(conjugate_by(v, rho)),
                   WithinAbs(avg_renyi2_entanglement(rho), 1e-9));
    }
  }
  CHECK_THROWS_AS(avg_renyi2_entanglement(Operator::identity(2, 2)), ArgumentError);
}

TEST_CASE("dimension cap is enforced") {
  const std::int64_t saved = dimension_cap();
  set_dimension_cap(64);
  CHECK_THROWS_AS(Operator::identity(2, 7), ResourceError);
  CHECK_NOTHROW(Operator::identity(2, 6));
  set_dimension_cap(saved);
  CHECK_THROWS_AS(Operator::identity(2, 13), ResourceError);
  CHECK_THROWS_AS(Operator(2, 1, Matrix::Zero(3, 3)), ArgumentError);
}

TEST_CASE("parallel loops are deterministic") {
  std::vector<int> out(100, 0);
  set_thread_count(4);
  parallel_for(100, [&](int i) { out[i] = i * i; });
  set_thread_count(1);
  for (int i = 0; i < 100; ++i) REQUIRE(out[i] == i * i);
}
