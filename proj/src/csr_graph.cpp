#include "gtrim/csr_graph.hpp"

#include <algorithm>
#include <string>

namespace gtrim {

CsrGraph::CsrGraph(std::vector<EdgeIndex> offsets, std::vector<VertexId> targets)
    : offsets_(std::move(offsets)), targets_(std::move(targets)) {
  if (offsets_.empty()) throw ValidationError("offsets must hold n+1 entries");
  const std::size_t n = offsets_.size() - 1;
  if (n > kMaxVertexCount) throw CapacityError("vertex count exceeds 32-bit id width");
  if (offsets_.front() != 0) throw ValidationError("offsets[0] must be 0");
  if (offsets_.back() != targets_.size()) {
    throw ValidationError("offsets[n] = " + std::to_string(offsets_.back()) +
                          " does not match m = " + std::to_string(targets_.size()));
  }
  if (!std::is_sorted(offsets_.begin(), offsets_.end())) {
    throw ValidationError("offsets must be nondecreasing");
  }
  for (VertexId t : targets_) {
    if (t >= n) throw ValidationError("target " + std::to_string(t) + " out of range");
  }
}

CsrGraph CsrGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > kMaxVertexCount) throw CapacityError("vertex count exceeds 32-bit id width");
  std::vector<EdgeIndex> offsets(n + 1, 0);
  for (const auto& [src, dst] : edges) {
    if (src >= n || dst >= n) throw ValidationError("edge endpoint out of range");
    ++offsets[src + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  std::vector<VertexId> targets(edges.size());
  std::vector<EdgeIndex> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& [src, dst] : edges) targets[fill[src]++] = dst;
  return CsrGraph(std::move(offsets), std::move(targets));
}

std::vector<Edge> CsrGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId v = 0; v < vertex_count(); ++v) {
    for (VertexId w : successors(v)) out.emplace_back(v, w);
  }
  return out;
}

CsrGraph transpose(const CsrGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<EdgeIndex> offsets(n + 1, 0);
  for (VertexId w : g.targets()) ++offsets[w + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  std::vector<VertexId> targets(g.edge_count());
  std::vector<EdgeIndex> fill(offsets.begin(), offsets.end() - 1);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.successors(v)) targets[fill[w]++] = v;
  }
  return CsrGraph(std::move(offsets), std::move(targets));
}

std::size_t max_out_degree(const CsrGraph& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.out_degree(v));
  return best;
}

std::size_t max_in_degree(const CsrGraph& g) {
  std::vector<std::size_t> in(g.vertex_count(), 0);
  for (VertexId w : g.targets()) ++in[w];
  return in.empty() ? 0 : *std::max_element(in.begin(), in.end());
}

}  // namespace gtrim
