#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace f2lab {

// Splits [begin, end) into one chunk per job and returns per-chunk results in
// chunk order, so callers can merge deterministically regardless of jobs.
template <typename R>
std::vector<R> run_chunked(uint64_t begin, uint64_t end, int jobs,
                           const std::function<R(uint64_t, uint64_t)>& worker) {
  if (jobs < 1) jobs = 1;
  const uint64_t span = end > begin ? end - begin : 0;
  if (jobs == 1 || span < 2) return {worker(begin, end)};
  const uint64_t n_chunks = std::min<uint64_t>(static_cast<uint64_t>(jobs), span);
  std::vector<R> results(n_chunks);
  std::vector<std::thread> threads;
  threads.reserve(n_chunks);
  for (uint64_t c = 0; c < n_chunks; ++c) {
    const uint64_t lo = begin + span * c / n_chunks;
    const uint64_t hi = begin + span * (c + 1) / n_chunks;
    threads.emplace_back([&, lo, hi, c] { results[c] = worker(lo, hi); });
  }
  for (auto& th : threads) th.join();
  return results;
}

}  // namespace f2lab
