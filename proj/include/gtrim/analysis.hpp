#pragma once

#include <cstdint>

#include "gtrim/csr_graph.hpp"
#include "gtrim/status.hpp"

namespace gtrim {

struct PeelingResult {
  // Synchronous rounds that removed at least one vertex.
  std::uint64_t alpha = 0;
  // Vertices removed across all rounds (vertices DEAD at the start excluded).
  std::uint64_t removed = 0;
};

/// Level-synchronous peeling: each round removes every LIVE vertex whose
/// LIVE out-degree is zero at the start of the round.
PeelingResult peel(const CsrGraph& g, const StatusArray& init);
PeelingResult peel(const CsrGraph& g);

std::uint64_t peeling_steps(const CsrGraph& g);

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_in_degree = 0;
  std::size_t max_out_degree = 0;
  std::uint64_t alpha = 0;
  // Fraction of vertices removed by trimming, in [0, 1].
  double trim_percent = 0.0;
};

GraphStats compute_stats(const CsrGraph& g);

}  // namespace gtrim
