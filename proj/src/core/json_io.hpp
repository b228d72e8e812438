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

#include "core/boolean.hpp"
#include "core/path.hpp"
#include "core/tensor.hpp"
#include "json.hpp"

namespace paulilens {

using Json = nlohmann::json;

/// Parses text, mapping syntax errors to InputError.
Json parse_json(const std::string& text);

/// {"d","n","re","im"} or {"gate","targets","d","n"}.
Operator operator_from_json(const Json& j);
Json operator_to_json(const Operator& o);

Json complex_vector_to_json(const Vector& v);

/// CircuitPath format. Each term's "h" is an operator on the support, an
/// operator on the whole register (its support is then verified), or a qubit
/// Pauli word {"pauli": "ZX"}.
CircuitPath path_from_json(const Json& j, bool strict);
Json path_to_json(const CircuitPath& p);

/// {"n", "table": [+-1, ...]}
BooleanFunction boolean_from_json(const Json& j);

}  // namespace paulilens
