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

#include "core/json_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "core/errors.hpp"
#include "core/gates.hpp"

namespace paulilens {
namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

Matrix read_matrix(const Json& rows, std::int64_t dim, const char* key) {
  Matrix m = Matrix::Zero(dim, dim);
  if (!rows.is_array() || static_cast<std::int64_t>(rows.size()) != dim)
    throw InputError(std::string("'") + key + "' must hold d^n rows");
  for (std::int64_t r = 0; r < dim; ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || static_cast<std::int64_t>(row.size()) != dim)
      throw InputError(std::string("'") + key + "' rows must hold d^n entries");
    for (std::int64_t c = 0; c < dim; ++c) {
      if (!row[c].is_number()) throw InputError(std::string("'") + key + "' entries must be numbers");
      m(r, c) = row[c].get<double>();
    }
  }
  return m;
}

Operator pauli_word(const std::string& word) {
  const int n = static_cast<int>(word.size());
  if (n == 0) throw InputError("empty Pauli word");
  Operator acc = Operator::identity(2, 0);
  for (char ch : word) {
    Operator site = Operator::identity(2, 1);
    switch (ch) {
      case 'I': break;
      case 'X': site = gate_local("X", 2); break;
      case 'Y': site = gate_local("Y", 2); break;
      case 'Z': site = gate_local("Z", 2); break;
      default: throw InputError(std::string("invalid Pauli letter '") + ch + "'");
    }
    acc = kron(acc, site);
  }
  return acc;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Operator operator_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("operator must be a JSON object");
  if (j.contains("gate")) {
    const auto name = field<std::string>(j, "gate");
    const int d = j.contains("d") ? field<int>(j, "d") : 2;
    const auto targets = field<std::vector<int>>(j, "targets");
    const int n = j.contains("n") ? field<int>(j, "n") : static_cast<int>(targets.size());
    return named_gate(name, targets, d, n);
  }
  const int d = field<int>(j, "d");
  const int n = field<int>(j, "n");
  if (n < 0) throw InputError("'n' must be non-negative");
  const std::int64_t dim = checked_dim(d, n);
  Matrix m = read_matrix(j.at("re"), dim, "re");
  if (j.contains("im")) m += Complex(0, 1) * read_matrix(j.at("im"), dim, "im");
  for (std::int64_t r = 0; r < dim; ++r)
    for (std::int64_t c = 0; c < dim; ++c)
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag()))
        throw InputError("operator entries must be finite");
  return Operator(d, n, std::move(m));
}

Json operator_to_json(const Operator& o) {
  Json re = Json::array(), im = Json::array();
  for (std::int64_t r = 0; r < o.dim(); ++r) {
    Json rr = Json::array(), ri = Json::array();
    for (std::int64_t c = 0; c < o.dim(); ++c) {
      rr.push_back(o(r, c).real());
      ri.push_back(o(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return {{"d", o.d()}, {"n", o.n()}, {"re", re}, {"im", im}};
}

Json complex_vector_to_json(const Vector& v) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v[i].real());
    im.push_back(v[i].imag());
  }
  return {{"re", re}, {"im", im}};
}

CircuitPath path_from_json(const Json& j, bool strict) {
  CircuitPath p;
  p.d = field<int>(j, "d");
  p.n = field<int>(j, "n");
  if (p.n < 1) throw InputError("path needs n >= 1");
  checked_dim(p.d, p.n);
  const Json segments = j.contains("segments") ? j.at("segments") : Json::array();
  if (!segments.is_array()) throw InputError("'segments' must be an array");
  for (const Json& js : segments) {
    PathSegment seg;
    seg.duration = field<double>(js, "duration");
    const Json terms = js.contains("terms") ? js.at("terms") : Json::array();
    if (!terms.is_array()) throw InputError("'terms' must be an array");
    for (const Json& jt : terms) {
      PathTerm term;
      term.support = field<std::vector<int>>(jt, "support");
      term.r = field<double>(jt, "r");
      if (!jt.contains("h")) throw InputError("missing field 'h'");
      const Json& jh = jt.at("h");
      const int k = static_cast<int>(term.support.size());
      if (jh.is_object() && jh.contains("pauli")) {
        if (p.d != 2) throw InputError("Pauli words need d = 2");
        term.h = pauli_word(field<std::string>(jh, "pauli"));
        if (term.h.n() != k) throw InputError("Pauli word length differs from the support size");
      } else {
        Operator h = operator_from_json(jh);
        if (h.n() == p.n && k != p.n) {
          // Whole-register h: verify its support, then reduce onto it.
          SubsetMask mask = 0;
          for (int q : term.support) {
            if (q < 0 || q >= p.n) throw ArgumentError("support index out of range");
            mask |= 1u << q;
          }
          if (!is_supported_on(h, mask))
            throw SupportError("term Hamiltonian acts outside its declared support");
          std::sort(term.support.begin(), term.support.end());
          const double scale =
              1.0 / static_cast<double>(checked_dim(p.d, p.n - std::popcount(mask)));
          h = partial_trace(h, mask).scaled(scale);
        }
        term.h = h;
      }
      seg.terms.push_back(std::move(term));
    }
    p.segments.push_back(std::move(seg));
  }
  validate_path(p, strict);
  return p;
}

Json path_to_json(const CircuitPath& p) {
  Json segments = Json::array();
  for (const PathSegment& seg : p.segments) {
    Json terms = Json::array();
    for (const PathTerm& t : seg.terms)
      terms.push_back({{"support", t.support}, {"h", operator_to_json(t.h)}, {"r", t.r}});
    segments.push_back({{"duration", seg.duration}, {"terms", terms}});
  }
  return {{"d", p.d}, {"n", p.n}, {"segments", segments}};
}

BooleanFunction boolean_from_json(const Json& j) {
  BooleanFunction f;
  f.n = field<int>(j, "n");
  f.table = field<std::vector<int>>(j, "table");
  check_boolean(f);
  return f;
}

}  // namespace paulilens
