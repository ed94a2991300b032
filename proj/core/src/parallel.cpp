#include "ribbon/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace ribbon {

int thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("RIBBON_THREADS")) {
    long requested = std::strtol(env, nullptr, 10);
    if (requested > 0) return static_cast<int>(std::min<long>(requested, 256));
  }
  return static_cast<int>(hw);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body) {
  if (count == 0) return;
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_budget()), count);
  if (workers <= 1) {
    body(0, count);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    std::size_t end = std::min(begin + chunk, count);
    threads.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& thread : threads) thread.join();
}

}  // namespace ribbon
