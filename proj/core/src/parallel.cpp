#include "hardygkz/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hardygkz {

namespace {

std::atomic<int> g_override{0};

int env_threads() {
  const char* s = std::getenv("HARDY_GKZ_THREADS");
  if (s == nullptr || *s == '\0') return 0;
  try {
    const int v = std::stoi(s);
    return v >= 1 ? v : 1;
  } catch (...) {
    return 0;
  }
}

}  // namespace

int max_threads() {
  const int o = g_override.load();
  if (o > 0) return o;
  const int e = env_threads();
  if (e > 0) return e;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void set_max_threads(int n) { g_override.store(n > 0 ? n : 0); }

void parallel_for(int begin, int end, const std::function<void(int)>& body) {
  const int count = end - begin;
  if (count <= 0) return;
  const int workers = std::min(max_threads(), count);
  if (workers <= 1) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    const int lo = begin + static_cast<int>(static_cast<long long>(count) * t / workers);
    const int hi = begin + static_cast<int>(static_cast<long long>(count) * (t + 1) / workers);
    pool.emplace_back([lo, hi, &body] {
      for (int i = lo; i < hi; ++i) body(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace hardygkz
