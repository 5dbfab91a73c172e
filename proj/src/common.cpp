#include "projconvex/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace projconvex {

int thread_count() {
  if (const char* env = std::getenv("PROJCONVEX_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

void parallel_chunks(long long n_chunks, const std::function<void(long long)>& fn) {
  int nt = std::min<long long>(thread_count(), n_chunks);
  if (nt <= 1) {
    for (long long c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    workers.emplace_back([&, t]() {
      for (long long c = t; c < n_chunks; c += nt) fn(c);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace projconvex
