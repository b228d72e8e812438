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

#include "core/path.hpp"

#include <cmath>
#include <sstream>

#include "core/errors.hpp"
#include "core/linalg.hpp"

namespace paulilens {

void validate_path(CircuitPath& path, bool strict) {
  checked_dim(path.d, path.n);
  for (std::size_t si = 0; si < path.segments.size(); ++si) {
    PathSegment& seg = path.segments[si];
    if (!(seg.duration > 0) || !std::isfinite(seg.duration))
      throw ArgumentError("segment " + std::to_string(si) + ": duration must be positive");
    for (std::size_t ti = 0; ti < seg.terms.size(); ++ti) {
      PathTerm& term = seg.terms[ti];
      const std::string where =
          "segment " + std::to_string(si) + " term " + std::to_string(ti) + ": ";
      const int k = static_cast<int>(term.support.size());
      if (k < 1 || k > 2) throw ArgumentError(where + "support must list 1 or 2 qudits");
      for (int j : term.support)
        if (j < 0 || j >= path.n) throw ArgumentError(where + "support index out of range");
      if (k == 2 && term.support[0] == term.support[1])
        throw ArgumentError(where + "support indices must differ");
      if (term.h.d() != path.d || term.h.n() != k)
        throw ArgumentError(where + "h must act on exactly the declared support");
      if (!std::isfinite(term.r)) throw ArgumentError(where + "r must be finite");
      if (!term.h.is_hermitian(1e-9)) throw ArgumentError(where + "h must be Hermitian");
      if (std::abs(term.h.trace()) / static_cast<double>(term.h.dim()) > 1e-9)
        throw ArgumentError(where + "h must be traceless");
      const double norm = operator_norm(term.h);
      if (norm == 0) throw ArgumentError(where + "h must be nonzero");
      if (std::abs(norm - 1.0) > kNormSlack) {
        if (strict) {
          std::ostringstream msg;
          msg << where << "||h||_inf = " << norm << ", expected 1";
          throw ArgumentError(msg.str());
        }
        term.h = term.h.scaled(1.0 / norm);
        term.r *= norm;
        std::ostringstream msg;
        msg << where << "rescaled h by 1/" << norm << " and moved the factor into r";
        path.warnings.push_back(msg.str());
      }
    }
  }
}

Operator segment_hamiltonian(const CircuitPath& path, const PathSegment& seg) {
  Operator h(path.d, path.n);
  for (const PathTerm& term : seg.terms)
    h = h + embed(term.h, term.support, path.n).scaled(term.r);
  return Operator(path.d, path.n, (h.matrix() + h.matrix().adjoint()) * 0.5);
}

Operator compile_unitary(const CircuitPath& path, int substeps) {
  if (substeps < 1) throw ArgumentError("substeps must be at least 1");
  Operator u = Operator::identity(path.d, path.n);
  for (const PathSegment& seg : path.segments) {
    const Operator h = segment_hamiltonian(path, seg);
    const Operator step(path.d, path.n,
                        expm_hermitian(h.matrix(), seg.duration / substeps));
    for (int i = 0; i < substeps; ++i) u = step * u;
  }
  return u;
}

double path_cost(const CircuitPath& path) {
  double cost = 0;
  for (const PathSegment& seg : path.segments) {
    double strength = 0;
    for (const PathTerm& term : seg.terms) strength += std::abs(term.r);
    cost += seg.duration * strength;
  }
  return cost;
}

}  // namespace paulilens
