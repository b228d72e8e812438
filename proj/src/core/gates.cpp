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

#include "core/gates.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace paulilens {
namespace {

void qubit_only(const std::string& name, int d) {
  if (d != 2) throw ArgumentError("gate " + name + " is defined for qubits only");
}

}  // namespace

std::vector<std::string> gate_names() {
  return {"X", "Y", "Z", "H", "S", "T", "CNOT", "CZ", "SWAP", "GZX"};
}

Operator gate_local(const std::string& name, int d) {
  using std::numbers::pi;
  const Complex i(0, 1);
  if (name == "X") return pauli_op(PauliIndex{{1}, {0}}, d, 1);
  if (name == "Z") return pauli_op(PauliIndex{{0}, {1}}, d, 1);
  if (name == "Y") {
    qubit_only(name, d);
    return pauli_op(PauliIndex{{1}, {1}}, d, 1).scaled(i);
  }
  if (name == "H") {
    Matrix m(d, d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        m(j, k) = std::polar(1.0 / std::sqrt(double(d)), 2 * pi * j * k / d);
    return Operator(d, 1, m);
  }
  if (name == "S" || name == "T") {
    qubit_only(name, d);
    Matrix m = Matrix::Identity(2, 2);
    m(1, 1) = std::polar(1.0, name == "S" ? pi / 2 : pi / 4);
    return Operator(2, 1, m);
  }
  if (name == "CNOT" || name == "CZ" || name == "SWAP") {
    Matrix m = Matrix::Zero(d * d, d * d);
    for (int c = 0; c < d; ++c)
      for (int t = 0; t < d; ++t) {
        const int col = c * d + t;
        if (name == "CNOT") m(c * d + (t + c) % d, col) = 1;
        if (name == "CZ") m(col, col) = std::polar(1.0, 2 * pi * c * t / d);
        if (name == "SWAP") m(t * d + c, col) = 1;
      }
    return Operator(d, 2, m);
  }
  if (name == "GZX") {
    qubit_only(name, d);
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1;
    m(2, 1) = 1;
    m(1, 2) = 1;
    m(3, 3) = -1;
    return Operator(2, 2, m);
  }
  throw ArgumentError("unknown gate '" + name + "'");
}

Operator named_gate(const std::string& name, const std::vector<int>& targets,
                    int d, int n) {
  const Operator local = gate_local(name, d);
  if (static_cast<int>(targets.size()) != local.n())
    throw ArgumentError("gate " + name + " needs " + std::to_string(local.n()) +
                        " target(s)");
  return embed(local, targets, n);
}

}  // namespace paulilens
