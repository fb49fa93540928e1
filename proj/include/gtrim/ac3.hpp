#pragma once

#include <atomic>
#include <barrier>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtrim/csr_graph.hpp"
#include "gtrim/implicit_graph.hpp"
#include "gtrim/metrics.hpp"
#include "gtrim/schedule.hpp"
#include "gtrim/status.hpp"

namespace gtrim {

struct Ac3Options {
  std::size_t workers = 1;
  std::size_t chunk_size = 4096;
  // Stop after this many sweeps even if the last one changed the graph.
  // The result stays sound but may be incomplete.
  std::optional<std::uint64_t> max_repetitions;
  // Also remove vertices without a LIVE predecessor. Needs the transpose.
  bool check_in_degree = false;
};

/// True iff v has no LIVE successor from its cursor onward. DEAD slots in
/// front of the first LIVE successor are skipped for good; the LIVE slot
/// itself stays under the cursor so the next sweep starts from it.
template <SuccessorGraph G>
bool zero_out_degree(const G& g, const StatusArray& status, EdgeCursor& cursor, VertexId v,
                     std::uint64_t& inspections) {
  const auto post = g.successors(v);
  const std::uint64_t end = static_cast<std::uint64_t>(std::ranges::size(post));
  std::uint64_t pos = cursor.position(v);
  for (; pos < end; ++pos) {
    ++inspections;
    if (status.is_live(static_cast<VertexId>(post[pos]))) {
      cursor.advance_to(v, pos);
      return false;
    }
  }
  cursor.advance_to(v, end);
  return true;
}

/// Repeated sweeps over all LIVE vertices, each worker pulling chunks of
/// vertices, removing those whose out-degree among LIVE vertices is zero.
/// Sweeping stops once a sweep changes nothing (that sweep is counted in
/// metrics.rounds) or max_repetitions is reached.
template <SuccessorGraph G>
TrimResult trim_ac3(const G& g, const StatusArray& init, const Ac3Options& opts,
                    const CsrGraph* transpose = nullptr) {
  const std::size_t n = g.vertex_count();
  if (opts.workers < 1) throw ConfigError("workers must be >= 1");
  if (opts.chunk_size < 1) throw ConfigError("chunk_size must be >= 1");
  if (opts.max_repetitions && *opts.max_repetitions < 1) throw ConfigError("max_repetitions must be >= 1");
  if (init.size() != n) throw ValidationError("initial status size does not match graph");
  if (opts.check_in_degree) {
    if constexpr (!std::same_as<G, CsrGraph>) {
      throw ConfigError("check_in_degree needs predecessors; not available on an implicit graph");
    } else {
      if (transpose == nullptr) throw ConfigError("check_in_degree requires the transposed graph");
      if (transpose->vertex_count() != n || transpose->edge_count() != g.edge_count()) {
        throw ValidationError("transpose shape does not match graph");
      }
    }
  }

  Stopwatch clock;
  TrimResult result{init, {}};
  StatusArray& status = result.status;
  EdgeCursor out_cursor(n);
  EdgeCursor in_cursor(opts.check_in_degree ? n : 0);

  std::vector<WorkerTally> tallies(opts.workers);
  ChunkScheduler scheduler(n, opts.chunk_size);
  std::atomic<bool> changed{false};
  std::uint64_t sweeps = 0;
  bool stop = false;

  auto end_of_sweep = [&]() noexcept {
    ++sweeps;
    const bool any = changed.exchange(false, std::memory_order_relaxed);
    if (!any || (opts.max_repetitions && sweeps >= *opts.max_repetitions)) stop = true;
    scheduler.reset();
  };
  std::barrier sync(static_cast<std::ptrdiff_t>(opts.workers), end_of_sweep);

  run_workers(opts.workers, [&](std::size_t p) {
    WorkerTally& tally = tallies[p];
    while (true) {
      while (auto range = scheduler.next()) {
        for (std::size_t i = range->begin; i < range->end; ++i) {
          const auto v = static_cast<VertexId>(i);
          if (!status.is_live(v)) continue;
          bool remove = zero_out_degree(g, status, out_cursor, v, tally.edges);
          if constexpr (std::same_as<G, CsrGraph>) {
            if (!remove && opts.check_in_degree) {
              remove = zero_out_degree(*transpose, status, in_cursor, v, tally.edges);
            }
          }
          if (remove && status.try_kill(v)) {
            ++tally.removed;
            changed.store(true, std::memory_order_relaxed);
          }
        }
      }
      sync.arrive_and_wait();
      if (stop) break;
    }
  });

  merge_tallies(tallies, result.metrics);
  result.metrics.rounds = sweeps;
  result.metrics.wall_time = clock.elapsed();
  return result;
}

template <SuccessorGraph G>
TrimResult trim_ac3(const G& g, const Ac3Options& opts = {}) {
  return trim_ac3(g, StatusArray(g.vertex_count()), opts);
}

}  // namespace gtrim
