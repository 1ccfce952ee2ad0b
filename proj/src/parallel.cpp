#include "birot/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace birot {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(long long n, int workers,
                  const std::function<void(long long, long long)>& fn) {
  if (n <= 0) return;
  const long long w = std::clamp<long long>(workers, 1, n);

  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run_chunk = [&](long long c) {
    const long long begin = n * c / w;
    const long long end = n * (c + 1) / w;
    try {
      fn(begin, end);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(w) - 1);
  for (long long c = 1; c < w; ++c) threads.emplace_back(run_chunk, c);
  run_chunk(0);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace birot
