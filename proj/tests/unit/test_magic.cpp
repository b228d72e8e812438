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

#include "core/errors.hpp"
#include "core/gates.hpp"
#include "core/gaussian.hpp"
#include "core/linear_map.hpp"
#include "core/magic.hpp"
#include "core/random.hpp"
#include "core/search.hpp"
#include "core/sensitivity.hpp"
#include "core/spectrum.hpp"
#include "support/oracles.hpp"

using namespace paulilens;
using Catch::Matchers::WithinAbs;

namespace {

const Operator T = gate_local("T", 2);
const Operator I1 = Operator::identity(2, 1);

Operator random_clifford(int n, Rng& rng) {
  static const std::vector<std::string> one = {"H", "S", "X", "Z"};
  Operator u = Operator::identity(2, n);
  for (int step = 0; step < 12; ++step) {
    if (n >= 2 && rng() % 3 == 0) {
      const int a = static_cast<int>(rng() % n);
      const int b = (a + 1 + static_cast<int>(rng() % (n - 1))) % n;
      u = named_gate(rng() & 1 ? "CNOT" : "CZ", {a, b}, 2, n) * u;
    } else {
      u = named_gate(one[rng() % one.size()], {static_cast<int>(rng() % n)}, 2, n) * u;
    }
  }
  return u;
}

Operator random_unit(int d, int n, Rng& rng) {
  const std::int64_t dim = checked_dim(d, n);
  const Operator o(d, n, ginibre(dim, dim, rng));
  return o.scaled(1.0 / l2_norm(o));
}

}  // namespace

TEST_CASE("magic entropy examples") {
  CHECK_THAT(magic_entropy(T), WithinAbs(1, 1e-9));
  CHECK_THAT(magic_entropy(gate_local("CNOT", 2)), WithinAbs(0, 1e-12));
  CHECK_THAT(magic_entropy(kron(T, T)), WithinAbs(1, 1e-9));
}

TEST_CASE("magic entropy properties") {
  Rng rng = stream_rng(40, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const Operator c = random_clifford(n, rng);
    REQUIRE_THAT(magic_entropy(c), WithinAbs(0, 1e-9));
    REQUIRE(is_clifford(c));
    const Operator with_t = c * named_gate("T", {trial % n}, 2, n);
    REQUIRE(magic_entropy(with_t) > 0.5);

    const Operator u = haar_unitary(2, n, rng);
    REQUIRE_THAT(magic_entropy(c * u), WithinAbs(magic_entropy(u), 1e-9));
  }
  for (int trial = 0; trial < 5; ++trial) {
    const Operator a = haar_unitary(2, 1, rng);
    const Operator b = haar_unitary(2, 2, rng);
    REQUIRE_THAT(magic_entropy(kron(a, b)),
                 WithinAbs(std::max(magic_entropy(a), magic_entropy(b)), 1e-9));
  }
  CHECK_THAT(magic_entropy(gate_local("H", 3)), WithinAbs(0, 1e-9));
  CHECK_THROWS_AS(magic_entropy(Operator(2, 1, Matrix::Ones(2, 2))), ArgumentError);
}

TEST_CASE("magic power") {
  SECTION("Clifford gates are exactly zero") {
    for (const std::string& name : {"H", "S", "CNOT", "SWAP"}) {
      const SearchResult r = magic_power_search(gate_local(name, 2));
      REQUIRE(r.value == 0);
      REQUIRE(r.exact);
    }
  }
  SECTION("T gate") {
    const SearchResult r = magic_power_search(T, 16, 1);
    CHECK_THAT(r.value, WithinAbs(1, 1e-9));
  }
  SECTION("T tensor T") {
    const SearchResult r = magic_power_search(kron(T, T), 16, 1);
    CHECK(r.value >= 2 - 1e-3);
    CHECK(r.value <= 2 + 1e-9);
  }
  SECTION("witness reproduces the value and survives traceless projection") {
    Rng rng = stream_rng(41, 0);
    for (int trial = 0; trial < 4; ++trial) {
      const Operator u = trial == 0 ? kron(T, I1) : haar_unitary(2, 1 + trial % 2, rng);
      const SearchResult r = magic_power_search(u, 8, trial);
      const LinearMap map = LinearMap::dense(transition_matrix(u).entries);
      REQUIRE_THAT(std::abs(entropy_change(map, r.witness)), WithinAbs(r.value, 1e-8));
      Vector traceless = r.witness;
      traceless[0] = 0;
      traceless.normalize();
      REQUIRE(std::abs(entropy_change(map, traceless)) >= r.value - 1e-9);
    }
  }
  SECTION("deterministic under a fixed seed") {
    Rng rng = stream_rng(42, 0);
    const Operator u = haar_unitary(2, 2, rng);
    const SearchResult a = magic_power_search(u, 6, 99);
    const SearchResult b = magic_power_search(u, 6, 99);
    REQUIRE(a.value == b.value);
    REQUIRE((a.witness - b.witness).norm() == 0);
  }
  SECTION("Clifford bi-invariance and subadditivity on the exactly known corpus") {
    Rng rng = stream_rng(43, 0);
    const Operator tt = kron(T, T);
    for (int trial = 0; trial < 3; ++trial) {
      const Operator v1 = random_clifford(2, rng);
      const Operator v2 = random_clifford(2, rng);
      REQUIRE_THAT(magic_power_search(v2 * tt * v1, 16, trial).value, WithinAbs(2, 0.05));
    }
    const double m_t = magic_power_search(kron(T, I1), 16).value;
    REQUIRE(magic_power_search(kron(T, I1) * kron(I1, T), 16).value <= 2 * m_t + 0.05);
    REQUIRE(magic_power_search(kron(T, T), 16).value <= 2 * magic_power_search(T, 16).value + 0.05);
  }
  SECTION("entropy of amplitudes") {
    Vector v = Vector::Zero(4);
    v << 0.5, 0.5, 0.5, 0.5;
    CHECK_THAT(entropy_of_amplitudes(v), WithinAbs(2, 1e-14));
  }
}

TEST_CASE("magic rate") {
  Rng rng = stream_rng(44, 0);
  SECTION("commuting pair") {
    const Operator h = random_hermitian(2, 2, rng);
    CHECK_THAT(magic_rate(h, h.scaled(1.0 / l2_norm(h))), WithinAbs(0, 1e-12));
  }
  SECTION("central differences") {
    const double step = 1e-5;
    for (int trial = 0; trial < 20; ++trial) {
      const int d = 2 + trial % 2;
      const Operator h = random_hermitian(d, 2, rng);
      const Operator o = random_unit(d, 2, rng);
      const auto at = [&](double t) {
        const Matrix u = oracle::evolve(h.matrix(), t);
        return oracle::entropy(u * o.matrix() * u.adjoint(), d, 2);
      };
      const double fd = (at(step) - at(-step)) / (2 * step);
      REQUIRE_THAT(magic_rate(h, o), WithinAbs(fd, 1e-5));
    }
  }
  SECTION("k-local bound") {
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 2 + trial % 2;
      const int n = 2 + trial % 2;
      const Operator h = random_local_hamiltonian(d, n, {0, n - 1}, rng);
      REQUIRE(magic_rate_bound_check(h, random_unit(d, n, rng), 2).satisfied);
    }
    const Operator h3 = random_local_hamiltonian(2, 3, {0, 1, 2}, rng);
    CHECK_THROWS_AS(magic_rate_bound_check(h3, random_unit(2, 3, rng), 2), SupportError);
  }
}

TEST_CASE("magic versus sensitivity relations") {
  Rng rng = stream_rng(45, 0);
  std::vector<Operator> corpus = {T, kron(T, T), gate_local("CNOT", 2), gate_local("GZX", 2),
                                  gate_local("SWAP", 2), named_gate("T", {1}, 2, 3)};
  for (int trial = 0; trial < 6; ++trial) corpus.push_back(haar_unitary(2, 1 + trial % 3, rng));
  for (const Operator& u : corpus) {
    const double m = magic_entropy(u);
    const double n = u.n();
    const double cis = circuit_sensitivity(u).value;
    REQUIRE(m <= 2 * (std::log2(n) + 1) * (cis + 1) + 1e-9);
    const double cisg = gaussian_circuit_sensitivity(u).value;
    REQUIRE(m <= 2 * std::log2(2 * n) * (cisg + 1) + 1e-9);
  }
}
