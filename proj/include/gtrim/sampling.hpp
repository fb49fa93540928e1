#pragma once

#include <cstdint>

#include "gtrim/csr_graph.hpp"
#include "gtrim/status.hpp"

namespace gtrim {

/// Keeps each edge independently with probability `ratio`, in (0, 1].
CsrGraph sample_edges(const CsrGraph& g, double ratio, std::uint64_t seed);

/// Initial status with each vertex pre-marked DEAD with probability
/// 1 - ratio. The graph itself is untouched.
StatusArray sample_vertices(std::size_t n, double ratio, std::uint64_t seed);

}  // namespace gtrim
