#ifndef STEKLOV_PARALLEL_HPP
#define STEKLOV_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "steklov/analytic_core.hpp"

namespace steklov {

/// Worker count from STEKLOV_THREADS (0 or 1 = sequential); defaults to the
/// hardware concurrency when unset or unparsable.
inline unsigned worker_count() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("STEKLOV_THREADS");
  if (env == nullptr) return hw;
  try {
    const long requested = std::stol(env);
    if (requested <= 0) return 1;
    return static_cast<unsigned>(requested);
  } catch (const std::exception&) {
    return hw;
  }
}

/// Runs body(i) for i in [0, n). The exception of the lowest failing index is
/// rethrown after all workers join.
template <typename Body>
void parallel_for(Index n, Body&& body) {
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<Index>(n, 1)));
  if (workers <= 1) {
    for (Index i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<Index> next{0};
  std::mutex guard;
  Index failed_at = n;
  std::exception_ptr failure;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (Index i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(guard);
          if (i < failed_at) {
            failed_at = i;
            failure = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace steklov

#endif  // STEKLOV_PARALLEL_HPP
