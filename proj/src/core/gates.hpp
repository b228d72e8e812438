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

#include <string>
#include <vector>

#include "core/tensor.hpp"

namespace paulilens {

/// Local matrix of a named gate: X, Y, Z, H, S, T, CNOT, CZ, SWAP, GZX.
/// For d > 2, H is the DFT, CNOT is the controlled shift |c,t> -> |c,t+c> and
/// CZ is the controlled clock; Y, S, T and GZX are qubit only.
Operator gate_local(const std::string& name, int d);

/// Named gate placed on `targets` of an n-qudit register.
Operator named_gate(const std::string& name, const std::vector<int>& targets,
                    int d, int n);

std::vector<std::string> gate_names();

}  // namespace paulilens
