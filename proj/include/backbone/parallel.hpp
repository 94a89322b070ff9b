#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace backbone {

inline int resolve_threads(int threads, int tasks) {
  int t = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return std::clamp(t, 1, std::max(1, tasks));
}

// Runs fn(i) for i in [0, count) on a small pool. Callers write results into
// per-index slots, so output never depends on scheduling.
template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  const int t = resolve_threads(threads, count);
  if (t == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) fn(i);
  };
  std::vector<std::jthread> pool;
  for (int i = 0; i < t; ++i) pool.emplace_back(worker);
}

}  // namespace backbone
