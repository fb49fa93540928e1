#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gtrim/csr_graph.hpp"
#include "gtrim/status.hpp"

namespace gtrim {

/// Reference result of brute-force trimming.
struct OracleResult {
  std::vector<bool> dead;
  // Full scans performed, including the final scan that kills nothing.
  std::uint64_t rounds = 0;

  std::size_t dead_count() const;
  std::vector<VertexId> dead_set() const;
};

/// Naive synchronous fixed point: every scan decides removals against the
/// status from the start of that scan. Slow on purpose; shares no code with
/// the engines.
OracleResult fixed_point_trim(const CsrGraph& g, const StatusArray& init);
OracleResult fixed_point_trim(const CsrGraph& g);

/// Same fixed point, but scanning in `order` and updating in place. The
/// dead set must not depend on the order; the round count may.
OracleResult fixed_point_trim_in_order(const CsrGraph& g, const StatusArray& init,
                                       std::span<const VertexId> order);

/// Every DEAD vertex has no LIVE successor.
bool check_sound(const CsrGraph& g, const StatusArray& status);
/// Soundness of the removals only: vertices DEAD in `init` are exempt.
bool check_sound(const CsrGraph& g, const StatusArray& status, const StatusArray& init);
/// Every vertex without a LIVE successor is DEAD.
bool check_complete(const CsrGraph& g, const StatusArray& status);

bool same_dead_set(const StatusArray& status, const OracleResult& oracle);

}  // namespace gtrim
