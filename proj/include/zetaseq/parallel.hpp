#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zetaseq {

/// Worker count: ZETA_SEQ_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// results[i] = fn(i) for i < n, computed on up to thread_count() threads.
/// Output order is by index whatever the schedule; the first exception
/// thrown by any task is rethrown after all workers finish.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, Fn fn) {
  std::vector<R> out(n);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace zetaseq
