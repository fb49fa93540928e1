#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <vector>

#include "gtrim/status.hpp"

namespace gtrim {

struct TrimMetrics {
  // Successor (or predecessor) slot inspections, one tally per worker.
  std::vector<std::uint64_t> per_worker_edges;
  // Largest waiting-set size any worker reached (AC-4 / AC-6).
  std::uint64_t max_qp = 0;
  std::chrono::nanoseconds wall_time{0};
  // LIVE -> DEAD transitions performed by the engine itself.
  std::uint64_t removed = 0;
  // AC-3: sweeps executed. AC-4 / AC-6: 1.
  std::uint64_t rounds = 0;

  std::uint64_t total_edges() const {
    return std::accumulate(per_worker_edges.begin(), per_worker_edges.end(), std::uint64_t{0});
  }
  std::uint64_t max_edges_per_worker() const {
    return per_worker_edges.empty() ? 0 : *std::max_element(per_worker_edges.begin(), per_worker_edges.end());
  }
  double wall_ms() const { return std::chrono::duration<double, std::milli>(wall_time).count(); }
};

struct TrimResult {
  StatusArray status;
  TrimMetrics metrics;
};

// Per-worker tallies live on separate cache lines while a trim runs and are
// merged into TrimMetrics at join time.
struct alignas(64) WorkerTally {
  std::uint64_t edges = 0;
  std::uint64_t removed = 0;
  std::uint64_t max_qp = 0;
};

inline void merge_tallies(const std::vector<WorkerTally>& tallies, TrimMetrics& metrics) {
  metrics.per_worker_edges.clear();
  for (const auto& t : tallies) {
    metrics.per_worker_edges.push_back(t.edges);
    metrics.removed += t.removed;
    metrics.max_qp = std::max(metrics.max_qp, t.max_qp);
  }
}

// Pushes onto a worker's private waiting set, tracking its high-water mark.
inline void push_tracked(std::vector<VertexId>& queue, VertexId v, WorkerTally& tally) {
  queue.push_back(v);
  tally.max_qp = std::max<std::uint64_t>(tally.max_qp, queue.size());
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::nanoseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace gtrim
