#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace gtrim {

struct VertexRange {
  std::size_t begin;
  std::size_t end;
};

/// Hands out consecutive chunks of [0, n) from a shared atomic cursor, the
/// equivalent of `schedule(dynamic, chunk)`.
class ChunkScheduler {
 public:
  ChunkScheduler(std::size_t n, std::size_t chunk) : n_(n), chunk_(std::max<std::size_t>(chunk, 1)) {}

  std::optional<VertexRange> next() noexcept {
    const std::size_t begin = next_.fetch_add(chunk_, std::memory_order_relaxed);
    if (begin >= n_) return std::nullopt;
    return VertexRange{begin, std::min(begin + chunk_, n_)};
  }

  void reset() noexcept { next_.store(0, std::memory_order_relaxed); }

 private:
  std::size_t n_;
  std::size_t chunk_;
  std::atomic<std::size_t> next_{0};
};

/// Runs body(worker) for worker = 0..workers-1 concurrently and joins.
/// Worker 0 runs on the calling thread.
template <class Body>
void run_workers(std::size_t workers, Body&& body) {
  if (workers <= 1) {
    body(std::size_t{0});
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers - 1);
  for (std::size_t p = 1; p < workers; ++p) threads.emplace_back([&body, p] { body(p); });
  body(std::size_t{0});
}

}  // namespace gtrim
