#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace qwalk {

// Runs fn(i) for i in [0, n) on up to jobs threads (static contiguous
// split). jobs <= 1 runs inline. fn must be safe to call concurrently
// for distinct i.
inline void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  jobs = std::min(jobs, n);
  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  int base = n / jobs, extra = n % jobs, begin = 0;
  for (int t = 0; t < jobs; ++t) {
    int len = base + (t < extra ? 1 : 0);
    pool.emplace_back([&fn, begin, len] {
      for (int i = begin; i < begin + len; ++i) fn(i);
    });
    begin += len;
  }
  for (auto& th : pool) th.join();
}

}  // namespace qwalk
