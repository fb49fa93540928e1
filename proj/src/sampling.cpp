#include "gtrim/sampling.hpp"

#include <string>
#include <vector>

#include "gtrim/random.hpp"

namespace gtrim {
namespace {

void check_ratio(double ratio) {
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw ArgumentError("sampling ratio must be in (0, 1], got " + std::to_string(ratio));
  }
}

}  // namespace

CsrGraph sample_edges(const CsrGraph& g, double ratio, std::uint64_t seed) {
  check_ratio(ratio);
  if (ratio == 1.0) return g;
  Rng rng(seed);
  const std::size_t n = g.vertex_count();
  std::vector<EdgeIndex> offsets(n + 1, 0);
  std::vector<VertexId> targets;
  targets.reserve(static_cast<std::size_t>(static_cast<double>(g.edge_count()) * ratio * 1.1) + 16);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.successors(v)) {
      if (rng.bernoulli(ratio)) targets.push_back(w);
    }
    offsets[v + 1] = targets.size();
  }
  return CsrGraph(std::move(offsets), std::move(targets));
}

StatusArray sample_vertices(std::size_t n, double ratio, std::uint64_t seed) {
  check_ratio(ratio);
  StatusArray status(n);
  if (ratio == 1.0) return status;
  Rng rng(seed);
  for (VertexId v = 0; v < n; ++v) {
    if (!rng.bernoulli(ratio)) status.try_kill(v);
  }
  return status;
}

}  // namespace gtrim
