#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace combicheck {

/// Parallel-map capability handed to the sweeps. Work items are claimed
/// dynamically from a shared counter; callers merge per-index results, so
/// output never depends on scheduling.
class Executor {
 public:
  explicit Executor(unsigned workers = 1) : workers_(std::max(1U, workers)) {}

  unsigned workers() const { return workers_; }

  /// Runs body(i) for every i in [0, count). The first exception thrown by any
  /// body is rethrown after all workers stop.
  template <class F>
  void for_each(std::size_t count, F&& body) const {
    if (workers_ == 1 || count < 2) {
      for (std::size_t i = 0; i < count; ++i) body(i);
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(count);
          return;
        }
      }
    };
    const auto n = static_cast<unsigned>(std::min<std::size_t>(workers_, count));
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
  }

  /// Returns {f(0), ..., f(count - 1)} in index order.
  template <class R, class F>
  std::vector<R> map(std::size_t count, F&& f) const {
    std::vector<R> out(count);
    for_each(count, [&](std::size_t i) { out[i] = f(i); });
    return out;
  }

 private:
  unsigned workers_;
};

}  // namespace combicheck
