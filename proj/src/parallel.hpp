// Copyright 2026 The Fairaudit Authors
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

#ifndef FAIRAUDIT_SRC_PARALLEL_HPP_
#define FAIRAUDIT_SRC_PARALLEL_HPP_

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fairaudit::internal {

// Runs fn(i) for i in [0, count) on `threads` workers pulling indices from a
// shared counter. fn returning false requests cooperative cancellation:
// workers stop pulling new indices. With threads <= 1 this degenerates to a
// plain sequential loop with early exit. The first exception thrown by any
// worker is rethrown on the caller.
template <typename Fn>
void cancellable_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!fn(i)) return;
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> cancelled{false};
  std::exception_ptr error;
  std::atomic<bool> has_error{false};

  auto worker = [&] {
    while (!cancelled.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        if (!fn(i)) cancelled.store(true, std::memory_order_relaxed);
      } catch (...) {
        if (!has_error.exchange(true)) error = std::current_exception();
        cancelled.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();  // joins

  if (has_error.load()) std::rethrow_exception(error);
}

}  // namespace fairaudit::internal

#endif  // FAIRAUDIT_SRC_PARALLEL_HPP_
