#include "contractlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace contractlab {

int worker_count(int limit) {
  int w = static_cast<int>(std::thread::hardware_concurrency());
  if (w <= 0) w = 1;
  if (const char* env = std::getenv("CONTRACTLAB_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) w = std::min(w, cap);
  }
  if (limit > 0) w = std::min(w, limit);
  return std::max(w, 1);
}

void parallel_chunks(std::uint64_t total,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn,
                     int max_workers) {
  if (total == 0) return;
  const int workers = std::min<std::uint64_t>(worker_count(max_workers), total);
  if (workers == 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (int i = 0; i < workers; ++i) {
    const std::uint64_t begin = chunk * i;
    const std::uint64_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, i, begin, end] { fn(i, begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace contractlab
