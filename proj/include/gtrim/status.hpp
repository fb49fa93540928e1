#pragma once

#include <atomic>
#include <cassert>
#include <cstdint>
#include <memory>
#include <thread>
#include <vector>

#include "gtrim/types.hpp"

namespace gtrim {

enum class Status : std::uint8_t { live = 0, dead = 1 };

/// Per-vertex LIVE/DEAD flags shared by all workers of a trim.
///
/// The only mutation is LIVE -> DEAD; there is no way back short of
/// constructing a new array. try_kill() is the compare-and-swap form and
/// succeeds for exactly one caller per vertex.
class StatusArray {
 public:
  StatusArray() = default;
  explicit StatusArray(std::size_t n, Status init = Status::live);
  StatusArray(const StatusArray& other);
  StatusArray& operator=(const StatusArray& other);
  StatusArray(StatusArray&&) noexcept = default;
  StatusArray& operator=(StatusArray&&) noexcept = default;

  std::size_t size() const noexcept { return n_; }

  bool is_live(VertexId v) const noexcept {
    return flags_[v].load(std::memory_order_acquire) == static_cast<std::uint8_t>(Status::live);
  }
  bool is_dead(VertexId v) const noexcept { return !is_live(v); }
  Status get(VertexId v) const noexcept { return is_live(v) ? Status::live : Status::dead; }

  /// Atomically LIVE -> DEAD. Returns whether this call made the transition.
  bool try_kill(VertexId v) noexcept {
    std::uint8_t expected = static_cast<std::uint8_t>(Status::live);
    return flags_[v].compare_exchange_strong(expected, static_cast<std::uint8_t>(Status::dead),
                                             std::memory_order_acq_rel, std::memory_order_acquire);
  }

  std::size_t dead_count() const noexcept;
  std::size_t live_count() const noexcept { return n_ - dead_count(); }
  std::vector<VertexId> dead_vertices() const;
  /// One bool per vertex, true for DEAD.
  std::vector<bool> dead_mask() const;

  friend bool operator==(const StatusArray& a, const StatusArray& b) noexcept;

 private:
  std::size_t n_ = 0;
  std::unique_ptr<std::atomic<std::uint8_t>[]> flags_;
};

/// Remaining out-degree per vertex, decremented with fetch-and-add.
class DegreeCounters {
 public:
  DegreeCounters() = default;
  explicit DegreeCounters(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  void set(VertexId v, std::int64_t value) noexcept { counts_[v].store(value, std::memory_order_relaxed); }
  std::int64_t get(VertexId v) const noexcept { return counts_[v].load(std::memory_order_acquire); }

  /// Atomically subtracts one and returns the post-decrement value.
  std::int64_t dec_degree(VertexId v) noexcept { return counts_[v].fetch_sub(1, std::memory_order_acq_rel) - 1; }

 private:
  std::size_t n_ = 0;
  std::unique_ptr<std::atomic<std::int64_t>[]> counts_;
};

/// One busy-wait flag per vertex, acquired by compare-and-swap.
class VertexLocks {
 public:
  static constexpr unsigned kSpinsBeforeYield = 64;

  VertexLocks() = default;
  explicit VertexLocks(std::size_t n);

  void lock(VertexId v) noexcept {
    bool expected = false;
    for (unsigned spins = 0; !flags_[v].compare_exchange_weak(expected, true, std::memory_order_acquire,
                                                              std::memory_order_relaxed);
         ++spins) {
      expected = false;
      if (spins >= kSpinsBeforeYield) std::this_thread::yield();
    }
  }
  bool try_lock(VertexId v) noexcept {
    bool expected = false;
    return flags_[v].compare_exchange_strong(expected, true, std::memory_order_acquire,
                                             std::memory_order_relaxed);
  }
  void unlock(VertexId v) noexcept { flags_[v].store(false, std::memory_order_release); }
  bool is_locked(VertexId v) const noexcept { return flags_[v].load(std::memory_order_relaxed); }

 private:
  std::unique_ptr<std::atomic<bool>[]> flags_;
};

/// Supporting sets: for each vertex w, the predecessors currently using w as
/// their single support. A vertex belongs to at most one set, so all sets
/// share one intrusive `next` array and cost O(n) in total. Appends go to the
/// tail; drain order is insertion order.
///
/// Not synchronized. Callers serialize appends per owner (the owner's lock in
/// the parallel engine) and only drain an owner once it is DEAD.
class SupportSets {
 public:
  static constexpr VertexId kNone = kMaxVertexCount;

  SupportSets() = default;
  explicit SupportSets(std::size_t n) : head_(n, kNone), tail_(n, kNone), next_(n, kNone) {}

  std::size_t size() const noexcept { return head_.size(); }

  void append(VertexId owner, VertexId member) noexcept {
    next_[member] = kNone;
    if (head_[owner] == kNone) {
      head_[owner] = member;
    } else {
      next_[tail_[owner]] = member;
    }
    tail_[owner] = member;
  }

  bool empty(VertexId owner) const noexcept { return head_[owner] == kNone; }

  /// Removes and returns the first member of owner's set, or kNone.
  VertexId pop_front(VertexId owner) noexcept {
    const VertexId member = head_[owner];
    if (member == kNone) return kNone;
    head_[owner] = next_[member];
    if (head_[owner] == kNone) tail_[owner] = kNone;
    next_[member] = kNone;
    return member;
  }

  /// Current members of owner's set, in drain order.
  std::vector<VertexId> members(VertexId owner) const;

 private:
  std::vector<VertexId> head_;
  std::vector<VertexId> tail_;
  std::vector<VertexId> next_;
};

/// Per-vertex position of the first successor slot not yet consumed. Only
/// ever moves forward.
class EdgeCursor {
 public:
  EdgeCursor() = default;
  explicit EdgeCursor(std::size_t n) : pos_(n, 0) {}

  std::size_t size() const noexcept { return pos_.size(); }
  std::uint64_t position(VertexId v) const noexcept { return pos_[v]; }
  void advance_to(VertexId v, std::uint64_t pos) noexcept {
    assert(pos >= pos_[v]);
    pos_[v] = pos;
  }

 private:
  std::vector<std::uint64_t> pos_;
};

}  // namespace gtrim
