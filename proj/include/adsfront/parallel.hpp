#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace adsfront {

inline unsigned default_thread_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Chunked parallel map over [0, n). The callable receives an index range and
// must write only to per-index slots, so scheduling never affects results.
template <typename Fn>
void parallel_for(std::size_t n, unsigned n_threads, Fn&& fn) {
  if (n == 0) return;
  if (n_threads <= 1 || n == 1) {
    fn(std::size_t{0}, n);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(n_threads, n);
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace adsfront
