#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace gss::detail {

// Runs fn(begin, end) over [0, total) in chunks of `chunk` items, spread over
// worker threads. Workers claim chunks from a shared counter, so results must
// be written to per-item slots (or otherwise commute) for determinism.
inline void parallel_for_chunks(uint64_t total, uint64_t chunk,
                                const std::function<void(uint64_t, uint64_t)>& fn,
                                int threads = 0) {
  if (total == 0) return;
  unsigned n_threads = threads > 0 ? static_cast<unsigned>(threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, 32);
  if (total <= chunk || n_threads == 1) {
    fn(0, total);
    return;
  }

  std::atomic<uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const uint64_t begin = next.fetch_add(chunk);
      if (begin >= total) return;
      fn(begin, std::min(begin + chunk, total));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace gss::detail
