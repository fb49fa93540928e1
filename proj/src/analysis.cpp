#include "gtrim/analysis.hpp"

#include <vector>

namespace gtrim {

PeelingResult peel(const CsrGraph& g, const StatusArray& init) {
  const std::size_t n = g.vertex_count();
  if (init.size() != n) throw ValidationError("initial status size does not match graph");
  const CsrGraph gt = transpose(g);

  std::vector<bool> dead = init.dead_mask();
  std::vector<std::uint64_t> live_out(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.successors(v)) live_out[v] += dead[w] ? 0 : 1;
  }

  PeelingResult result;
  std::vector<VertexId> frontier;
  for (VertexId v = 0; v < n; ++v) {
    if (!dead[v] && live_out[v] == 0) frontier.push_back(v);
  }
  std::vector<VertexId> next;
  while (!frontier.empty()) {
    ++result.alpha;
    for (VertexId v : frontier) dead[v] = true;
    result.removed += frontier.size();
    next.clear();
    for (VertexId w : frontier) {
      for (VertexId pred : gt.successors(w)) {
        if (!dead[pred] && --live_out[pred] == 0) next.push_back(pred);
      }
    }
    frontier.swap(next);
  }
  return result;
}

PeelingResult peel(const CsrGraph& g) { return peel(g, StatusArray(g.vertex_count())); }

std::uint64_t peeling_steps(const CsrGraph& g) { return peel(g).alpha; }

GraphStats compute_stats(const CsrGraph& g) {
  GraphStats stats;
  stats.n = g.vertex_count();
  stats.m = g.edge_count();
  stats.max_in_degree = max_in_degree(g);
  stats.max_out_degree = max_out_degree(g);
  const PeelingResult peeled = peel(g);
  stats.alpha = peeled.alpha;
  stats.trim_percent = stats.n == 0 ? 0.0 : static_cast<double>(peeled.removed) / static_cast<double>(stats.n);
  return stats;
}

}  // namespace gtrim
