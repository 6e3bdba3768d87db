#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace gfp {

// Worker count for grid sweeps: GFP_THREADS when set to a positive integer,
// otherwise the hardware concurrency.
inline std::size_t thread_count_from_env() {
  std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
  const char* env = std::getenv("GFP_THREADS");
  if (env == nullptr) return hw;
  try {
    long v = std::stol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  return hw;
}

// Runs fn(i) for every i in [0, count). Callers write results into slots
// indexed by i, so the outcome does not depend on scheduling. The first
// exception thrown by any task is rethrown after all workers finish.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace gfp
