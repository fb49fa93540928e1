#pragma once

#include <vector>

#include "gtrim/csr_graph.hpp"
#include "gtrim/generators.hpp"
#include "gtrim/random.hpp"

namespace gtrim::testing {

// Five vertices v1..v5 stored as 0..4:
// v1 -> v4, v1 -> v3, v3 -> v5, v3 -> v4, v4 -> v5. v2 has no successors.
inline CsrGraph five_vertex_graph() {
  const std::vector<Edge> edges{{0, 3}, {0, 2}, {2, 4}, {2, 3}, {3, 4}};
  return CsrGraph::from_edges(5, edges);
}

inline CsrGraph two_cycle() { return make_cycle(2); }

// Small random graph with optional self-loops and duplicate edges, the kind
// the generators never produce.
inline CsrGraph messy_random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const auto u = static_cast<VertexId>(rng.below(n));
    const auto v = static_cast<VertexId>(rng.below(n));
    edges.emplace_back(u, v);
  }
  return CsrGraph::from_edges(n, edges);
}

}  // namespace gtrim::testing
