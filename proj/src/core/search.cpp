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

#include "core/search.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>

#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/linalg.hpp"
#include "core/random.hpp"

namespace paulilens {
namespace {

constexpr double kLog2E = std::numbers::log2e;
constexpr int kPlateauWindow = 50;
constexpr double kPlateauTol = 1e-10;

// Real gradient (2 d/d conj x) of H(|x|^2) for unit x.
Vector entropy_gradient(const Vector& x) {
  Vector g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double p = std::norm(x[i]);
    g[i] = p > 1e-300 ? -2.0 * (std::log2(p) + kLog2E) * x[i] : Complex(0);
  }
  return g;
}

struct Ascent {
  double value;  // signed objective
  Vector point;
  bool converged;
};

class Runner {
 public:
  Runner(const LinearMap& a, const SearchOptions& opts) : a_(a), opts_(opts) {
    mask_ = RealVector::Ones(a.size);
    for (std::int64_t i : opts.frozen) {
      if (i < 0 || i >= a.size) throw ArgumentError("frozen index out of range");
      mask_[i] = 0;
    }
  }

  Vector project(Vector c) const {
    c = c.cwiseProduct(mask_.cast<Complex>());
    const double norm = c.norm();
    if (norm == 0) throw ArgumentError("search start lies in the frozen subspace");
    return c / norm;
  }

  double objective(const Vector& c, int sign) const {
    return sign * entropy_change(a_, c);
  }

  Ascent ascend(Vector c, int sign) const {
    c = project(c);
    double value = objective(c, sign);
    double step = 0.1;
    std::deque<double> history{value};
    bool converged = false;
    for (int it = 0; it < opts_.max_iterations; ++it) {
      const Vector ac = a_.apply(c);
      Vector g = a_.adjoint(entropy_gradient(ac)) - entropy_gradient(c);
      g *= static_cast<double>(sign);
      g = g.cwiseProduct(mask_.cast<Complex>());
      g -= c.dot(g).real() * c;  // tangent space of the real sphere
      const double gnorm2 = g.squaredNorm();
      if (gnorm2 < 1e-24) {
        converged = true;
        break;
      }
      bool moved = false;
      step = std::min(step * 2.0, 10.0);
      while (step > 1e-14) {
        Vector trial = c + step * g;
        trial /= trial.norm();
        const double tv = objective(trial, sign);
        if (tv >= value + 1e-4 * step * gnorm2) {
          c = trial;
          value = tv;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) {
        converged = true;
        break;
      }
      history.push_back(value);
      if (static_cast<int>(history.size()) > kPlateauWindow) {
        history.pop_front();
        if (value - history.front() < kPlateauTol) {
          converged = true;
          break;
        }
      }
    }
    return {value, c, converged};
  }

 private:
  const LinearMap& a_;
  const SearchOptions& opts_;
  RealVector mask_;
};

}  // namespace

double entropy_of_amplitudes(const Vector& x) {
  const double norm2 = x.squaredNorm();
  if (norm2 == 0) return 0;
  return shannon_entropy(x.cwiseAbs2() / norm2);
}

double entropy_change(const LinearMap& a, const Vector& c) {
  return entropy_of_amplitudes(a.apply(c)) - entropy_of_amplitudes(c);
}

SearchResult maximize_entropy_change(const LinearMap& a, const SearchOptions& opts) {
  if (opts.restarts < 0) throw ArgumentError("restart count must be non-negative");
  const std::int64_t size = a.size;
  Runner runner(a, opts);

  std::vector<bool> frozen(size, false);
  for (std::int64_t i : opts.frozen) frozen[i] = true;

  // Exact scores of every admissible basis vector.
  std::vector<std::int64_t> basis;
  std::vector<double> basis_score(size, -1.0);
  for (std::int64_t i = 0; i < size; ++i) {
    if (frozen[i]) continue;
    Vector e = Vector::Zero(size);
    e[i] = 1;
    basis_score[i] = std::abs(entropy_change(a, e));
    basis.push_back(i);
  }
  if (basis.empty()) throw ArgumentError("every coordinate is frozen");
  std::stable_sort(basis.begin(), basis.end(), [&](std::int64_t x, std::int64_t y) {
    return basis_score[x] > basis_score[y];
  });

  SearchResult best;
  best.value = basis_score[basis.front()];
  best.witness = Vector::Zero(size);
  best.witness[basis.front()] = 1;

  const int basis_starts = std::min<int>(opts.restarts, static_cast<int>(basis.size()));
  const int total = basis_starts + opts.restarts;
  std::vector<Ascent> results(2 * total);
  parallel_for(2 * total, [&](int job) {
    const int start = job / 2;
    const int sign = job % 2 == 0 ? 1 : -1;
    Vector c0;
    if (start < basis_starts) {
      c0 = Vector::Zero(size);
      c0[basis[start]] = 1;
      // A tiny deterministic kick lets ascent leave saddle points of H.
      Rng rng = stream_rng(opts.seed, 2 * static_cast<std::uint64_t>(start) + 1);
      c0 += 1e-3 * random_unit_vector(size, rng);
    } else {
      Rng rng = stream_rng(opts.seed, 2 * static_cast<std::uint64_t>(start));
      c0 = random_unit_vector(size, rng);
    }
    results[job] = runner.ascend(c0, sign);
  });

  bool all_converged = true;
  for (const Ascent& r : results) {
    all_converged = all_converged && r.converged;
    const double v = std::abs(entropy_change(a, r.point));
    if (v > best.value) {
      best.value = v;
      best.witness = r.point;
    }
  }
  best.value = std::abs(entropy_change(a, best.witness));
  best.restarts_used = total;
  best.converged = all_converged;
  return best;
}

}  // namespace paulilens
