#include "gtrim/status.hpp"

namespace gtrim {

StatusArray::StatusArray(std::size_t n, Status init)
    : n_(n), flags_(std::make_unique<std::atomic<std::uint8_t>[]>(n)) {
  for (std::size_t v = 0; v < n; ++v) flags_[v].store(static_cast<std::uint8_t>(init), std::memory_order_relaxed);
}

StatusArray::StatusArray(const StatusArray& other)
    : n_(other.n_), flags_(std::make_unique<std::atomic<std::uint8_t>[]>(other.n_)) {
  for (std::size_t v = 0; v < n_; ++v) {
    flags_[v].store(other.flags_[v].load(std::memory_order_relaxed), std::memory_order_relaxed);
  }
}

StatusArray& StatusArray::operator=(const StatusArray& other) {
  if (this != &other) *this = StatusArray(other);
  return *this;
}

std::size_t StatusArray::dead_count() const noexcept {
  std::size_t dead = 0;
  for (std::size_t v = 0; v < n_; ++v) dead += flags_[v].load(std::memory_order_relaxed);
  return dead;
}

std::vector<VertexId> StatusArray::dead_vertices() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < n_; ++v) {
    if (is_dead(static_cast<VertexId>(v))) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::vector<bool> StatusArray::dead_mask() const {
  std::vector<bool> out(n_);
  for (std::size_t v = 0; v < n_; ++v) out[v] = is_dead(static_cast<VertexId>(v));
  return out;
}

bool operator==(const StatusArray& a, const StatusArray& b) noexcept {
  if (a.n_ != b.n_) return false;
  for (std::size_t v = 0; v < a.n_; ++v) {
    if (a.flags_[v].load(std::memory_order_relaxed) != b.flags_[v].load(std::memory_order_relaxed)) return false;
  }
  return true;
}

DegreeCounters::DegreeCounters(std::size_t n)
    : n_(n), counts_(std::make_unique<std::atomic<std::int64_t>[]>(n)) {
  for (std::size_t v = 0; v < n; ++v) counts_[v].store(0, std::memory_order_relaxed);
}

VertexLocks::VertexLocks(std::size_t n) : flags_(std::make_unique<std::atomic<bool>[]>(n)) {
  for (std::size_t v = 0; v < n; ++v) flags_[v].store(false, std::memory_order_relaxed);
}

std::vector<VertexId> SupportSets::members(VertexId owner) const {
  std::vector<VertexId> out;
  for (VertexId m = head_[owner]; m != kNone; m = next_[m]) out.push_back(m);
  return out;
}

}  // namespace gtrim
