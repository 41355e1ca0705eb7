#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace creutz {

// Deterministic parallel map: results land at their input index, so output is
// identical for any worker count. f(i) must not touch shared mutable state.
template <class F>
auto parallel_map(std::size_t n, int threads, F&& f) {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(n);
  if (n == 0) return out;
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  if (workers > n) workers = static_cast<unsigned>(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        out[i] = f(i);
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace creutz
