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

#include "core/config.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "core/errors.hpp"

namespace paulilens {
namespace {
std::atomic<std::int64_t> g_cap{kDefaultDimensionCap};
std::atomic<int> g_threads{1};
}  // namespace

std::int64_t dimension_cap() { return g_cap.load(); }

void set_dimension_cap(std::int64_t cap) {
  if (cap < 1) throw ArgumentError("dimension cap must be positive");
  g_cap.store(cap);
}

int thread_count() { return g_threads.load(); }

void set_thread_count(int threads) {
  if (threads < 1) throw ArgumentError("thread count must be at least 1");
  g_threads.store(threads);
}

void parallel_for(int count, const std::function<void(int)>& fn) {
  const int workers = std::min(thread_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace paulilens
