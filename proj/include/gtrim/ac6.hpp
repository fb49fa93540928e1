#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gtrim/csr_graph.hpp"
#include "gtrim/implicit_graph.hpp"
#include "gtrim/metrics.hpp"
#include "gtrim/schedule.hpp"
#include "gtrim/status.hpp"

namespace gtrim {

struct Ac6Options {
  std::size_t workers = 1;
  std::size_t chunk_size = 4096;
  // Sequential engine only: drain each supporting set in a shuffled order
  // instead of insertion order. The fixed point does not depend on it.
  std::optional<std::uint64_t> drain_shuffle_seed;
};

/// Everything an AC-6 trim mutates. Never holds a transpose.
struct Ac6State {
  explicit Ac6State(const StatusArray& init)
      : status(init), cursor(init.size()), supports(init.size()), locks(init.size()) {}

  StatusArray status;
  EdgeCursor cursor;
  SupportSets supports;
  VertexLocks locks;
};

/// Injection points for schedule tests. The default does nothing.
struct NoHooks {
  // Called after v has seen w LIVE without the lock, before lock(w).
  void before_lock(VertexId /*v*/, VertexId /*w*/) noexcept {}
};

/// Finds the next LIVE successor of v past its cursor and registers v in
/// that successor's supporting set. If none is left, v is killed and pushed
/// onto queue. Returns true iff v found a support. Single-threaded form.
template <SuccessorGraph G>
bool do_post(const G& g, Ac6State& s, VertexId v, std::vector<VertexId>& queue, WorkerTally& tally) {
  const auto post = g.successors(v);
  const std::uint64_t end = static_cast<std::uint64_t>(std::ranges::size(post));
  for (std::uint64_t pos = s.cursor.position(v); pos < end; ++pos) {
    ++tally.edges;
    const auto w = static_cast<VertexId>(post[pos]);
    if (s.status.is_live(w)) {
      s.cursor.advance_to(v, pos + 1);
      s.supports.append(w, v);
      return true;
    }
  }
  s.cursor.advance_to(v, end);
  [[maybe_unused]] const bool killed = s.status.try_kill(v);
  assert(killed);
  ++tally.removed;
  push_tracked(queue, v, tally);
  return false;
}

/// Concurrent form. The unlocked status read only filters; the decision is
/// the re-check under w's lock. The cursor moves before the append so that
/// whoever later drains w.S sees it. v is locked around its own kill so no
/// append into v.S can slip in after it is DEAD.
template <SuccessorGraph G, class Hooks = NoHooks>
bool do_post_concurrent(const G& g, Ac6State& s, VertexId v, std::vector<VertexId>& queue,
                        WorkerTally& tally, Hooks& hooks) {
  const auto post = g.successors(v);
  const std::uint64_t end = static_cast<std::uint64_t>(std::ranges::size(post));
  for (std::uint64_t pos = s.cursor.position(v); pos < end; ++pos) {
    ++tally.edges;
    const auto w = static_cast<VertexId>(post[pos]);
    if (!s.status.is_live(w)) continue;
    hooks.before_lock(v, w);
    s.locks.lock(w);
    if (s.status.is_live(w)) {
      s.cursor.advance_to(v, pos + 1);
      s.supports.append(w, v);
      s.locks.unlock(w);
      return true;
    }
    s.locks.unlock(w);
  }
  s.cursor.advance_to(v, end);
  s.locks.lock(v);
  [[maybe_unused]] const bool killed = s.status.try_kill(v);
  s.locks.unlock(v);
  assert(killed);
  ++tally.removed;
  push_tracked(queue, v, tally);
  return false;
}

template <SuccessorGraph G>
TrimMetrics trim_ac6_seq(const G& g, Ac6State& s, const Ac6Options& opts = {}) {
  const std::size_t n = g.vertex_count();
  if (s.status.size() != n) throw ValidationError("state size does not match graph");
  Stopwatch clock;
  std::vector<WorkerTally> tallies(1);
  WorkerTally& tally = tallies.front();
  std::vector<VertexId> queue;
  std::vector<VertexId> batch;
  std::optional<std::mt19937_64> shuffler;
  if (opts.drain_shuffle_seed) shuffler.emplace(*opts.drain_shuffle_seed);

  for (VertexId v = 0; v < n; ++v) {
    if (!s.status.is_live(v)) continue;
    if (do_post(g, s, v, queue, tally)) continue;
    while (!queue.empty()) {
      const VertexId w = queue.back();
      queue.pop_back();
      if (!shuffler) {
        for (VertexId u = s.supports.pop_front(w); u != SupportSets::kNone; u = s.supports.pop_front(w)) {
          do_post(g, s, u, queue, tally);
        }
        continue;
      }
      batch.clear();
      for (VertexId u = s.supports.pop_front(w); u != SupportSets::kNone; u = s.supports.pop_front(w)) {
        batch.push_back(u);
      }
      std::shuffle(batch.begin(), batch.end(), *shuffler);
      for (VertexId u : batch) do_post(g, s, u, queue, tally);
    }
  }

  TrimMetrics metrics;
  merge_tallies(tallies, metrics);
  metrics.rounds = 1;
  metrics.wall_time = clock.elapsed();
  return metrics;
}

template <SuccessorGraph G, class Hooks = NoHooks>
TrimMetrics trim_ac6_par(const G& g, Ac6State& s, const Ac6Options& opts, Hooks hooks = {}) {
  const std::size_t n = g.vertex_count();
  if (opts.workers < 1) throw ConfigError("workers must be >= 1");
  if (opts.chunk_size < 1) throw ConfigError("chunk_size must be >= 1");
  if (s.status.size() != n) throw ValidationError("state size does not match graph");
  Stopwatch clock;
  std::vector<WorkerTally> tallies(opts.workers);
  ChunkScheduler scheduler(n, opts.chunk_size);

  run_workers(opts.workers, [&](std::size_t p) {
    WorkerTally& tally = tallies[p];
    Hooks worker_hooks = hooks;
    std::vector<VertexId> queue;
    while (auto range = scheduler.next()) {
      for (std::size_t i = range->begin; i < range->end; ++i) {
        const auto v = static_cast<VertexId>(i);
        // Only vertices that start DEAD are skipped here: a vertex enters a
        // supporting set or dies only through its own first do_post.
        if (!s.status.is_live(v)) continue;
        if (do_post_concurrent(g, s, v, queue, tally, worker_hooks)) continue;
        while (!queue.empty()) {
          const VertexId w = queue.back();
          queue.pop_back();
          // w is DEAD, so nobody appends to w.S any more.
          for (VertexId u = s.supports.pop_front(w); u != SupportSets::kNone; u = s.supports.pop_front(w)) {
            do_post_concurrent(g, s, u, queue, tally, worker_hooks);
          }
        }
      }
    }
  });

  TrimMetrics metrics;
  merge_tallies(tallies, metrics);
  metrics.rounds = 1;
  metrics.wall_time = clock.elapsed();
  return metrics;
}

template <SuccessorGraph G>
TrimResult trim_ac6_seq(const G& g, const StatusArray& init, const Ac6Options& opts = {}) {
  if (init.size() != g.vertex_count()) throw ValidationError("initial status size does not match graph");
  Ac6State state(init);
  TrimMetrics metrics = trim_ac6_seq(g, state, opts);
  return {std::move(state.status), std::move(metrics)};
}

template <SuccessorGraph G>
TrimResult trim_ac6_seq(const G& g) {
  return trim_ac6_seq(g, StatusArray(g.vertex_count()));
}

template <SuccessorGraph G>
TrimResult trim_ac6_par(const G& g, const StatusArray& init, const Ac6Options& opts) {
  if (init.size() != g.vertex_count()) throw ValidationError("initial status size does not match graph");
  Ac6State state(init);
  TrimMetrics metrics = trim_ac6_par(g, state, opts);
  return {std::move(state.status), std::move(metrics)};
}

template <SuccessorGraph G>
TrimResult trim_ac6_par(const G& g, const Ac6Options& opts) {
  return trim_ac6_par(g, StatusArray(g.vertex_count()), opts);
}

/// Quiescence checks on the supporting sets after an AC-6 run.
struct SupportAudit {
  bool disjoint = true;             // no vertex in two sets, or twice in one
  bool dead_owners_empty = true;    // DEAD vertices have drained sets
  bool members_live = true;         // every member is LIVE
  bool members_are_predecessors = true;
  bool live_vertices_supported = true;  // every LIVE vertex sits in exactly one set

  bool ok() const {
    return disjoint && dead_owners_empty && members_live && members_are_predecessors &&
           live_vertices_supported;
  }
};

template <SuccessorGraph G>
SupportAudit audit_supports(const G& g, const Ac6State& s) {
  const std::size_t n = g.vertex_count();
  SupportAudit audit;
  std::vector<std::uint32_t> seen(n, 0);
  for (VertexId owner = 0; owner < n; ++owner) {
    const auto members = s.supports.members(owner);
    if (!members.empty() && s.status.is_dead(owner)) audit.dead_owners_empty = false;
    for (VertexId u : members) {
      if (++seen[u] > 1) audit.disjoint = false;
      if (s.status.is_dead(u)) audit.members_live = false;
      const auto post = g.successors(u);
      if (std::find(std::ranges::begin(post), std::ranges::end(post), owner) == std::ranges::end(post)) {
        audit.members_are_predecessors = false;
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (s.status.is_live(v) && seen[v] != 1) audit.live_vertices_supported = false;
  }
  return audit;
}

}  // namespace gtrim
