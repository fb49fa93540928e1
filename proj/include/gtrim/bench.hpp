#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gtrim/ac4.hpp"
#include "gtrim/csr_graph.hpp"
#include "gtrim/metrics.hpp"
#include "gtrim/status.hpp"

namespace gtrim {

// ac4 seeds its counters by traversal, ac4star from CSR offsets.
enum class Algorithm { ac3, ac4, ac4star, ac6 };

Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algo);

struct EngineOptions {
  std::size_t workers = 1;
  std::size_t chunk_size = 4096;
  std::optional<std::uint64_t> max_repetitions;  // AC-3
  bool check_in_degree = false;                  // AC-3
  std::optional<CounterInit> counter_init;       // AC-4, overrides the algorithm default
};

/// Runs one engine on fresh state. `gt` is the transpose, needed by AC-4 and
/// the in-degree AC-3 variant; it is computed on the spot when null.
TrimResult run_engine(Algorithm algo, const CsrGraph& g, const CsrGraph* gt, const StatusArray& init,
                      const EngineOptions& opts);

enum class SamplingMode { edges, vertices };

struct SamplingPlan {
  SamplingMode mode = SamplingMode::edges;
  std::vector<double> ratios;
};

struct BenchConfig {
  std::vector<Algorithm> algorithms{Algorithm::ac6};
  std::vector<std::size_t> workers{1};
  std::size_t chunk_size = 4096;
  std::size_t repetitions = 50;
  std::uint64_t seed = 42;
  std::optional<SamplingPlan> sampling;
  // AC-3 / AC-4 knobs passed through to every run.
  std::optional<std::uint64_t> max_repetitions;
  bool check_in_degree = false;
  std::optional<CounterInit> counter_init;
};

enum class RowKind { run, mean, ci95 };

struct BenchRow {
  Algorithm algorithm = Algorithm::ac6;
  std::size_t workers = 1;
  RowKind kind = RowKind::run;
  std::size_t rep = 0;  // run rows only
  double max_edges_per_worker = 0;
  double total_edges = 0;
  double max_qp = 0;
  double removed = 0;
  double wall_ms = 0;
  std::optional<std::size_t> chunk_size;
  std::optional<double> ratio;
  // Run rows only: vertices LIVE when the engine returned.
  std::uint64_t live_after = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  // False if two runs on the same input produced different DEAD sets.
  bool dead_sets_consistent = true;
};

/// Every algorithm x worker count x sampling ratio, `repetitions` times each,
/// followed by a mean row and a 95% half-width row per group.
BenchReport run_bench(const CsrGraph& g, const BenchConfig& cfg);

/// One mean row per chunk size, averaged over `repetitions` runs.
BenchReport chunk_sweep(const CsrGraph& g, Algorithm algo, std::size_t workers,
                        const std::vector<std::size_t>& chunk_sizes, std::size_t repetitions = 1);

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);
void write_json_lines(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace gtrim
