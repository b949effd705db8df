#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace ordtop {

// Worker cap: ORDTOP_THREADS when set (clamped to [1,64]), else hardware.
inline int thread_budget() {
  if (const char* env = std::getenv("ORDTOP_THREADS")) {
    int v = std::atoi(env);
    if (v < 1) v = 1;
    if (v > 64) v = 64;
    return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Cooperative interruption (set by the CLI on SIGINT).  Long audits poll
// this and report partial results instead of dying mid-scan.
inline std::atomic<bool>& interrupt_flag() {
  static std::atomic<bool> flag{false};
  return flag;
}

inline bool interrupt_flag_set() { return interrupt_flag().load(std::memory_order_relaxed); }

// Splits [0, count) into fixed chunks, maps each chunk on a worker, and
// returns the per-chunk results in chunk order.  The chunking is a pure
// function of count, never of the thread budget, so merged output is
// identical for any ORDTOP_THREADS.
template <typename R>
std::vector<R> parallel_map_chunks(std::size_t count,
                                   const std::function<R(std::size_t, std::size_t)>& fn) {
  const std::size_t chunk = 1024;
  const std::size_t nchunks = count == 0 ? 0 : (count + chunk - 1) / chunk;
  std::vector<R> results(nchunks);
  int workers = thread_budget();
  if (workers <= 1 || nchunks <= 1) {
    for (std::size_t c = 0; c < nchunks; ++c)
      results[c] = fn(c * chunk, std::min(count, (c + 1) * chunk));
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&]() {
    while (true) {
      std::size_t c = next.fetch_add(1);
      if (c >= nchunks) break;
      results[c] = fn(c * chunk, std::min(count, (c + 1) * chunk));
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace ordtop
