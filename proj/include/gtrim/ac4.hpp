#pragma once

#include <cstdint>

#include "gtrim/csr_graph.hpp"
#include "gtrim/metrics.hpp"
#include "gtrim/status.hpp"

namespace gtrim {

/// How out-degree counters are seeded: by walking every successor slot
/// (each walk counts as an inspection), or from CSR offset differences.
enum class CounterInit { traverse, offset_diff };

struct Ac4Options {
  std::size_t workers = 1;
  std::size_t chunk_size = 4096;
  CounterInit counter_init = CounterInit::offset_diff;
};

struct Ac4State {
  explicit Ac4State(const StatusArray& init) : status(init), counters(init.size()) {}

  StatusArray status;
  DegreeCounters counters;
};

// AC-4 needs predecessors, so every entry point takes the transpose and only
// accepts an explicit CsrGraph. Vertices that start DEAD are propagated like
// freshly removed ones, which keeps the counters exact.

TrimMetrics trim_ac4_seq(const CsrGraph& g, const CsrGraph& gt, Ac4State& state,
                         CounterInit init_mode = CounterInit::offset_diff);
TrimResult trim_ac4_seq(const CsrGraph& g, const CsrGraph& gt, const StatusArray& init,
                        CounterInit init_mode = CounterInit::offset_diff);
TrimResult trim_ac4_seq(const CsrGraph& g, const CsrGraph& gt);

TrimMetrics trim_ac4_par(const CsrGraph& g, const CsrGraph& gt, Ac4State& state, const Ac4Options& opts);
TrimResult trim_ac4_par(const CsrGraph& g, const CsrGraph& gt, const StatusArray& init, const Ac4Options& opts);
TrimResult trim_ac4_par(const CsrGraph& g, const CsrGraph& gt, const Ac4Options& opts);

}  // namespace gtrim
