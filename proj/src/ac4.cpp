#include "gtrim/ac4.hpp"

#include <barrier>
#include <cassert>
#include <vector>

#include "gtrim/schedule.hpp"

namespace gtrim {
namespace {

void check_shapes(const CsrGraph& g, const CsrGraph& gt, const StatusArray& status) {
  if (gt.vertex_count() != g.vertex_count() || gt.edge_count() != g.edge_count()) {
    throw ValidationError("transpose shape does not match graph (n or m differs)");
  }
  if (status.size() != g.vertex_count()) throw ValidationError("status size does not match graph");
}

void init_counter(const CsrGraph& g, DegreeCounters& counters, VertexId v, CounterInit mode,
                  WorkerTally& tally) {
  if (mode == CounterInit::offset_diff) {
    counters.set(v, static_cast<std::int64_t>(g.out_degree(v)));
    return;
  }
  std::int64_t degree = 0;
  for ([[maybe_unused]] VertexId w : g.successors(v)) {
    ++tally.edges;
    ++degree;
  }
  counters.set(v, degree);
}

// Drains queue: every predecessor of a removed vertex loses one unit of
// out-degree; whoever takes it to zero and wins the CAS removes it next.
void propagate(const CsrGraph& gt, Ac4State& s, std::vector<VertexId>& queue, WorkerTally& tally) {
  while (!queue.empty()) {
    const VertexId w = queue.back();
    queue.pop_back();
    for (VertexId pred : gt.successors(w)) {
      ++tally.edges;
      const std::int64_t remaining = s.counters.dec_degree(pred);
      assert(remaining >= 0 && "out-degree counter underflow: transpose inconsistent with graph");
      if (remaining == 0 && s.status.try_kill(pred)) {
        ++tally.removed;
        push_tracked(queue, pred, tally);
      }
    }
  }
}

}  // namespace

TrimMetrics trim_ac4_seq(const CsrGraph& g, const CsrGraph& gt, Ac4State& s, CounterInit init_mode) {
  check_shapes(g, gt, s.status);
  Stopwatch clock;
  const std::size_t n = g.vertex_count();
  std::vector<WorkerTally> tallies(1);
  WorkerTally& tally = tallies.front();
  const std::vector<bool> initially_dead = s.status.dead_mask();

  for (VertexId v = 0; v < n; ++v) init_counter(g, s.counters, v, init_mode, tally);

  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (initially_dead[v]) {
      push_tracked(queue, v, tally);
    } else if (s.counters.get(v) == 0 && s.status.try_kill(v)) {
      ++tally.removed;
      push_tracked(queue, v, tally);
    }
    propagate(gt, s, queue, tally);
  }

  TrimMetrics metrics;
  merge_tallies(tallies, metrics);
  metrics.rounds = 1;
  metrics.wall_time = clock.elapsed();
  return metrics;
}

TrimResult trim_ac4_seq(const CsrGraph& g, const CsrGraph& gt, const StatusArray& init, CounterInit init_mode) {
  Ac4State state(init);
  TrimMetrics metrics = trim_ac4_seq(g, gt, state, init_mode);
  return {std::move(state.status), std::move(metrics)};
}

TrimResult trim_ac4_seq(const CsrGraph& g, const CsrGraph& gt) {
  return trim_ac4_seq(g, gt, StatusArray(g.vertex_count()));
}

TrimMetrics trim_ac4_par(const CsrGraph& g, const CsrGraph& gt, Ac4State& s, const Ac4Options& opts) {
  if (opts.workers < 1) throw ConfigError("workers must be >= 1");
  if (opts.chunk_size < 1) throw ConfigError("chunk_size must be >= 1");
  check_shapes(g, gt, s.status);
  Stopwatch clock;
  const std::size_t n = g.vertex_count();
  std::vector<WorkerTally> tallies(opts.workers);
  const std::vector<bool> initially_dead = s.status.dead_mask();
  ChunkScheduler init_chunks(n, opts.chunk_size);
  ChunkScheduler trim_chunks(n, opts.chunk_size);
  std::barrier sync(static_cast<std::ptrdiff_t>(opts.workers));

  run_workers(opts.workers, [&](std::size_t p) {
    WorkerTally& tally = tallies[p];
    while (auto range = init_chunks.next()) {
      for (std::size_t i = range->begin; i < range->end; ++i) {
        init_counter(g, s.counters, static_cast<VertexId>(i), opts.counter_init, tally);
      }
    }
    sync.arrive_and_wait();

    std::vector<VertexId> queue;  // private to this worker
    while (auto range = trim_chunks.next()) {
      for (std::size_t i = range->begin; i < range->end; ++i) {
        const auto v = static_cast<VertexId>(i);
        if (initially_dead[v]) {
          push_tracked(queue, v, tally);
        } else if (s.counters.get(v) == 0 && s.status.try_kill(v)) {
          ++tally.removed;
          push_tracked(queue, v, tally);
        }
        propagate(gt, s, queue, tally);
      }
    }
  });

  TrimMetrics metrics;
  merge_tallies(tallies, metrics);
  metrics.rounds = 1;
  metrics.wall_time = clock.elapsed();
  return metrics;
}

TrimResult trim_ac4_par(const CsrGraph& g, const CsrGraph& gt, const StatusArray& init, const Ac4Options& opts) {
  Ac4State state(init);
  TrimMetrics metrics = trim_ac4_par(g, gt, state, opts);
  return {std::move(state.status), std::move(metrics)};
}

TrimResult trim_ac4_par(const CsrGraph& g, const CsrGraph& gt, const Ac4Options& opts) {
  return trim_ac4_par(g, gt, StatusArray(g.vertex_count()), opts);
}

}  // namespace gtrim
