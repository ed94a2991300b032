#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ribbon {

// Worker count: RIBBON_THREADS caps it, 0 or unset means hardware concurrency.
int thread_budget();

// Runs `body(begin, end)` over a chunked partition of [0, count) on up to
// thread_budget() threads. Chunk boundaries are deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

// Deterministic map-reduce: per-chunk results are merged in chunk order, so
// the outcome is independent of scheduling.
template <class Result, class ChunkFn, class CombineFn>
Result parallel_reduce(std::size_t count, Result init, ChunkFn chunk_fn, CombineFn combine) {
  if (count == 0) return init;
  // One slot per chunk; parallel_for assigns each chunk to one worker.
  std::vector<Result> slots;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  const std::size_t workers = static_cast<std::size_t>(thread_budget());
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t begin = 0; begin < count; begin += chunk)
    ranges.push_back({begin, std::min(begin + chunk, count)});
  slots.resize(ranges.size(), init);
  parallel_for(ranges.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) slots[i] = chunk_fn(ranges[i].first, ranges[i].second);
  });
  Result out = init;
  for (auto& slot : slots) combine(out, std::move(slot));
  return out;
}

}  // namespace ribbon
