#pragma once

#include <cstdint>

#include "gtrim/csr_graph.hpp"

namespace gtrim {

// All generators are deterministic in (n, m, seed, params), produce directed
// graphs without self-loops or duplicate edges, and list each vertex's
// successors in ascending order.

/// Erdos-Renyi: m distinct directed edges drawn uniformly.
/// Throws InfeasibleError if m > n(n-1).
CsrGraph gen_er(std::size_t n, std::uint64_t m, std::uint64_t seed);

/// Barabasi-Albert preferential attachment with k = m / n links per new
/// vertex. Each new vertex v receives min(k, v) edges from distinct older
/// vertices picked proportionally to degree + 1, so the result is a DAG
/// with in-degree at most k and heavy-tailed out-degree. Vertex v < k can
/// only get v links, so the edge count is n*k - k(k+1)/2 for n > k.
CsrGraph gen_ba(std::size_t n, std::uint64_t m, std::uint64_t seed);

struct RmatParams {
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
};

/// R-MAT recursive quadrant selection on an n x n adjacency matrix. Ranges
/// are halved as floor/ceil, so n need not be a power of two. Self-loops
/// and duplicates are redrawn.
CsrGraph gen_rmat(std::size_t n, std::uint64_t m, std::uint64_t seed, RmatParams params = {});

/// Simple shapes for tests and examples.
CsrGraph make_chain(std::size_t n);   // 0 -> 1 -> ... -> n-1
CsrGraph make_cycle(std::size_t n);   // chain plus n-1 -> 0
CsrGraph make_star(std::size_t n, bool inward);  // hub 0 to/from leaves 1..n-1

}  // namespace gtrim
