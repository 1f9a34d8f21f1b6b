#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace mockrank {

inline long default_thread_count() {
  if (const char* env = std::getenv("MOCKRANK_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<long>(hw) : 1;
}

// Chunked parallel sweep over [lo, hi].  Callers write into index-addressed
// slots so the result is identical for any thread count.
inline void parallel_for(long lo, long hi, long threads,
                         const std::function<void(long)>& body) {
  if (hi < lo) return;
  long count = hi - lo + 1;
  if (threads <= 1 || count < 4) {
    for (long i = lo; i <= hi; ++i) body(i);
    return;
  }
  if (threads > count) threads = count;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  long chunk = (count + threads - 1) / threads;
  for (long t = 0; t < threads; ++t) {
    long a = lo + t * chunk;
    long b = std::min(hi, a + chunk - 1);
    if (a > hi) break;
    pool.emplace_back([a, b, &body] {
      for (long i = a; i <= b; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace mockrank
