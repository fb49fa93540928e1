#include "gtrim/generators.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gtrim/random.hpp"

namespace gtrim {
namespace {

// Sorted unique (src << 32 | dst) keys to a CSR graph.
CsrGraph from_sorted_keys(std::size_t n, const std::vector<std::uint64_t>& keys) {
  std::vector<EdgeIndex> offsets(n + 1, 0);
  std::vector<VertexId> targets;
  targets.reserve(keys.size());
  for (std::uint64_t key : keys) {
    ++offsets[(key >> 32) + 1];
    targets.push_back(static_cast<VertexId>(key & 0xffffffffu));
  }
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  return CsrGraph(std::move(offsets), std::move(targets));
}

std::uint64_t pair_capacity(std::size_t n) {
  return n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1);
}

void check_n(std::size_t n) {
  if (n < 1) throw ArgumentError("generators need n >= 1");
  if (n > kMaxVertexCount) throw CapacityError("vertex count exceeds 32-bit id width");
}

// Draws until `keys` holds m distinct non-loop edges, redrawing collisions
// in batches. `draw` returns a key or nothing for a rejected draw.
template <class Draw>
std::vector<std::uint64_t> draw_distinct(std::uint64_t m, Draw&& draw) {
  std::vector<std::uint64_t> keys;
  keys.reserve(m);
  std::size_t stalled = 0;
  while (keys.size() < m) {
    const std::size_t before = keys.size();
    const std::uint64_t missing = m - before;
    for (std::uint64_t i = 0; i < missing; ++i) {
      if (auto key = draw()) keys.push_back(*key);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    stalled = keys.size() == before ? stalled + 1 : 0;
    if (stalled > 64) throw InfeasibleError("generator cannot find enough distinct edges");
  }
  return keys;
}

}  // namespace

CsrGraph gen_er(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  check_n(n);
  const std::uint64_t capacity = pair_capacity(n);
  if (m > capacity) {
    throw InfeasibleError("ER: m = " + std::to_string(m) + " exceeds n(n-1) = " + std::to_string(capacity));
  }
  Rng rng(seed);
  const std::uint64_t span = n - 1;
  auto to_key = [span](std::uint64_t index) {
    const std::uint64_t src = index / span;
    std::uint64_t dst = index % span;
    if (dst >= src) ++dst;  // skip the diagonal
    return (src << 32) | dst;
  };

  std::vector<std::uint64_t> keys;
  if (m > 0 && capacity <= 4 * m) {
    // Dense: partial Fisher-Yates over every admissible pair.
    std::vector<std::uint64_t> all(capacity);
    std::iota(all.begin(), all.end(), std::uint64_t{0});
    for (std::uint64_t i = 0; i < m; ++i) std::swap(all[i], all[i + rng.below(capacity - i)]);
    all.resize(m);
    keys.reserve(m);
    for (std::uint64_t index : all) keys.push_back(to_key(index));
    std::sort(keys.begin(), keys.end());
  } else {
    keys = draw_distinct(m, [&]() -> std::optional<std::uint64_t> { return to_key(rng.below(capacity)); });
  }
  return from_sorted_keys(n, keys);
}

CsrGraph gen_ba(std::size_t n, std::uint64_t m, std::uint64_t seed) {
  check_n(n);
  const std::uint64_t k = m / n;
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, n * k)));
  // Each vertex appears once on arrival and once per incident edge, so a
  // uniform pick from the pool is proportional to degree + 1.
  std::vector<VertexId> pool;
  pool.reserve(n + 2 * edges.capacity());
  std::vector<VertexId> chosen;
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = static_cast<VertexId>(i);
    chosen.clear();
    if (i <= k) {
      for (VertexId u = 0; u < v; ++u) chosen.push_back(u);
    } else {
      while (chosen.size() < k) {
        const VertexId u = pool[rng.below(pool.size())];
        if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) chosen.push_back(u);
      }
    }
    for (VertexId u : chosen) {
      edges.emplace_back(u, v);
      pool.push_back(u);
      pool.push_back(v);
    }
    pool.push_back(v);
  }
  return CsrGraph::from_edges(n, edges);
}

CsrGraph gen_rmat(std::size_t n, std::uint64_t m, std::uint64_t seed, RmatParams params) {
  check_n(n);
  const auto [a, b, c] = params;
  if (a < 0 || b < 0 || c < 0 || a + b + c > 1.0 + 1e-12) {
    throw ArgumentError("RMAT probabilities must be nonnegative with a + b + c <= 1");
  }
  if (m > pair_capacity(n)) throw InfeasibleError("RMAT: m exceeds n(n-1)");
  Rng rng(seed);
  auto draw = [&]() -> std::optional<std::uint64_t> {
    std::uint64_t src_off = 0, dst_off = 0, src_range = n, dst_range = n;
    while (src_range > 1 || dst_range > 1) {
      const double r = rng.uniform();
      bool src_high, dst_high;
      if (src_range > 1 && dst_range > 1) {
        src_high = r >= a + b;  // quadrants c and d
        dst_high = (r >= a && r < a + b) || r >= a + b + c;  // quadrants b and d
      } else if (src_range > 1) {
        src_high = r >= a + b;
        dst_high = false;
      } else {
        src_high = false;
        dst_high = r >= a + c;
      }
      if (src_range > 1) {
        if (src_high) src_off += src_range / 2;
        src_range = src_high ? src_range - src_range / 2 : src_range / 2;
      }
      if (dst_range > 1) {
        if (dst_high) dst_off += dst_range / 2;
        dst_range = dst_high ? dst_range - dst_range / 2 : dst_range / 2;
      }
    }
    if (src_off == dst_off) return std::nullopt;
    return (src_off << 32) | dst_off;
  };
  return from_sorted_keys(n, draw_distinct(m, draw));
}

CsrGraph make_chain(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return CsrGraph::from_edges(n, edges);
}

CsrGraph make_cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return CsrGraph::from_edges(n, edges);
}

CsrGraph make_star(std::size_t n, bool inward) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    if (inward) {
      edges.emplace_back(v, 0);
    } else {
      edges.emplace_back(0, v);
    }
  }
  return CsrGraph::from_edges(n, edges);
}

}  // namespace gtrim
