#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gtrim/types.hpp"

namespace gtrim {

using Edge = std::pair<VertexId, VertexId>;

/// Immutable directed graph in compressed sparse row form.
///
/// Successors of v are targets()[offsets()[v] .. offsets()[v+1]). The
/// constructor validates offsets and targets, so every live CsrGraph
/// satisfies the CSR invariants.
class CsrGraph {
 public:
  CsrGraph() : offsets_{0} {}
  CsrGraph(std::vector<EdgeIndex> offsets, std::vector<VertexId> targets);

  /// Builds a graph from an edge list. Edges are grouped by source with a
  /// stable sort, so each vertex keeps its successors in input order.
  static CsrGraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size(); }

  std::span<const VertexId> successors(VertexId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const noexcept {
    return static_cast<std::size_t>(offsets_[v + 1] - offsets_[v]);
  }
  EdgeIndex first_edge(VertexId v) const noexcept { return offsets_[v]; }

  std::span<const EdgeIndex> offsets() const noexcept { return offsets_; }
  std::span<const VertexId> targets() const noexcept { return targets_; }

  /// All (source, target) pairs in CSR order.
  std::vector<Edge> edges() const;

  friend bool operator==(const CsrGraph&, const CsrGraph&) = default;

 private:
  std::vector<EdgeIndex> offsets_;
  std::vector<VertexId> targets_;
};

/// Reverses every edge. Predecessor lists come out ordered by source id.
CsrGraph transpose(const CsrGraph& g);

std::size_t max_in_degree(const CsrGraph& g);
std::size_t max_out_degree(const CsrGraph& g);

}  // namespace gtrim
