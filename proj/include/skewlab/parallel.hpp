#pragma once

// Minimal worker-pool helpers. A thread count of 0 or 1 means "run on the
// calling thread"; callers pick deterministic work decompositions so results
// never depend on the count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace skewlab {

inline constexpr const char* threads_env_var = "SKEWLAB_THREADS";

/// Parses SKEWLAB_THREADS. Unset or empty yields 0 (sequential).
inline unsigned threads_from_env() {
  const char* raw = std::getenv(threads_env_var);
  if (raw == nullptr || *raw == '\0') return 0;
  const std::string text(raw);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 6) {
    throw std::invalid_argument(std::string(threads_env_var) +
                                " must be a non-negative integer, got '" + text + "'");
  }
  return static_cast<unsigned>(std::stoul(text));
}

/// Calls body(i) for every i in [0, count). Indices are handed out
/// dynamically; the first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const auto workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(count, std::memory_order_relaxed);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace skewlab
