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

#include <cstdint>
#include <functional>

namespace paulilens {

inline constexpr std::int64_t kDefaultDimensionCap = 4096;

/// Largest admissible d^n. Every Operator constructor enforces it.
std::int64_t dimension_cap();
void set_dimension_cap(std::int64_t cap);

/// Worker threads used by the embarrassingly parallel loops (search restarts).
int thread_count();
void set_thread_count(int threads);

/// Runs fn(i) for i in [0, count). Work is statically partitioned, so any
/// result that depends only on i is independent of the thread count.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace paulilens
