#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gensol {

/// Runs fn(worker, worker_count) on `threads` workers and rethrows the first
/// exception. Each worker decides its own share of the work from its index.
template <typename Fn>
void run_workers(int threads, Fn&& fn) {
  const int count = std::max(1, threads);
  if (count == 1) {
    fn(0, 1);
    return;
  }
  std::exception_ptr error;
  std::mutex mutex;
  std::vector<std::thread> pool;
  pool.reserve(count);
  for (int w = 0; w < count; ++w)
    pool.emplace_back([&, w] {
      try {
        fn(w, count);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace gensol
