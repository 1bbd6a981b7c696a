#pragma once

#include <atomic>
#include <charconv>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace genelab {

// Locale-independent shortest round-trip formatting for doubles. Integral
// values get a ".0" suffix so they read back as floating point.
inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, ptr);
  bool plain = true;
  for (char c : s)
    if (c != '-' && !(c >= '0' && c <= '9')) plain = false;
  if (plain) s += ".0";
  return s;
}

// Runs fn(0..n-1) on up to `workers` threads. Results must be written to
// per-index slots; iteration order never influences outputs.
inline void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  const int count = std::min(workers, n);
  std::vector<std::thread> pool;
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace genelab
