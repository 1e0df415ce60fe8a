#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace tjoin {

inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs f(i) for i in [0, n). Work items must be independent; callers that need
// deterministic output write into slot i and merge in index order afterwards.
template <typename F>
void parallel_for(size_t n, int workers, F&& f) {
  workers = std::min<size_t>(std::max(workers, 1), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        f(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace tjoin
