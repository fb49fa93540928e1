#pragma once

#include <atomic>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ranges>
#include <utility>
#include <vector>

#include "gtrim/csr_graph.hpp"

namespace gtrim {

/// Anything an on-the-fly engine can trim: a vertex count and an ordered,
/// indexable successor sequence per vertex. Predecessors are never requested.
template <class G>
concept SuccessorGraph = requires(const G& g, VertexId v) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  { g.successors(v) } -> std::ranges::random_access_range;
};

/// Graph given only by a successor function, e.g. a state space expanded on
/// demand. Every call to successors() regenerates the sequence and adds its
/// length to traversal_count().
class ImplicitGraph {
 public:
  using PostFn = std::function<void(VertexId, std::vector<VertexId>&)>;

  ImplicitGraph(std::size_t n, PostFn post) : n_(n), post_(std::move(post)) {}

  std::size_t vertex_count() const noexcept { return n_; }

  std::vector<VertexId> successors(VertexId v) const {
    std::vector<VertexId> out;
    post_(v, out);
    traversals_.fetch_add(out.size(), std::memory_order_relaxed);
    return out;
  }

  std::uint64_t traversal_count() const noexcept {
    return traversals_.load(std::memory_order_relaxed);
  }
  void reset_traversal_count() noexcept { traversals_.store(0, std::memory_order_relaxed); }

  /// Wraps an explicit graph behind the successor-function interface.
  static ImplicitGraph view_of(const CsrGraph& g) {
    return ImplicitGraph(g.vertex_count(), [&g](VertexId v, std::vector<VertexId>& out) {
      auto post = g.successors(v);
      out.assign(post.begin(), post.end());
    });
  }

 private:
  std::size_t n_;
  PostFn post_;
  mutable std::atomic<std::uint64_t> traversals_{0};
};

static_assert(SuccessorGraph<CsrGraph>);
static_assert(SuccessorGraph<ImplicitGraph>);

}  // namespace gtrim
