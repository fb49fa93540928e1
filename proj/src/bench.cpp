#include "gtrim/bench.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "gtrim/ac3.hpp"
#include "gtrim/ac6.hpp"
#include "gtrim/sampling.hpp"

namespace gtrim {
namespace {

constexpr double kZ95 = 1.96;

BenchRow run_row(Algorithm algo, std::size_t workers, std::size_t rep, const TrimResult& r) {
  BenchRow row;
  row.algorithm = algo;
  row.workers = workers;
  row.kind = RowKind::run;
  row.rep = rep;
  row.max_edges_per_worker = static_cast<double>(r.metrics.max_edges_per_worker());
  row.total_edges = static_cast<double>(r.metrics.total_edges());
  row.max_qp = static_cast<double>(r.metrics.max_qp);
  row.removed = static_cast<double>(r.metrics.removed);
  row.wall_ms = r.metrics.wall_ms();
  row.live_after = r.status.live_count();
  return row;
}

// Mean and 95% half-width rows over a group of run rows.
void append_summary(std::vector<BenchRow>& rows, std::size_t first) {
  const std::size_t count = rows.size() - first;
  if (count == 0) return;
  BenchRow mean = rows[first];
  BenchRow ci = rows[first];
  mean.kind = RowKind::mean;
  ci.kind = RowKind::ci95;
  mean.rep = ci.rep = 0;
  mean.live_after = ci.live_after = 0;
  auto field = [&](double BenchRow::*member) {
    double sum = 0;
    for (std::size_t i = first; i < rows.size(); ++i) sum += rows[i].*member;
    const double avg = sum / static_cast<double>(count);
    double sq = 0;
    for (std::size_t i = first; i < rows.size(); ++i) sq += (rows[i].*member - avg) * (rows[i].*member - avg);
    const double sd = count > 1 ? std::sqrt(sq / static_cast<double>(count - 1)) : 0.0;
    mean.*member = avg;
    ci.*member = kZ95 * sd / std::sqrt(static_cast<double>(count));
  };
  field(&BenchRow::max_edges_per_worker);
  field(&BenchRow::total_edges);
  field(&BenchRow::max_qp);
  field(&BenchRow::removed);
  field(&BenchRow::wall_ms);
  rows.push_back(mean);
  rows.push_back(ci);
}

std::string_view kind_label(const BenchRow& row) {
  switch (row.kind) {
    case RowKind::mean: return "mean";
    case RowKind::ci95: return "ci95";
    default: return {};
  }
}

// Integers print exactly; aggregates keep a few decimals.
std::string number(double value) {
  if (value == std::floor(value) && std::fabs(value) < 9.007199254740992e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

}  // namespace

Algorithm parse_algorithm(std::string_view name) {
  if (name == "ac3") return Algorithm::ac3;
  if (name == "ac4") return Algorithm::ac4;
  if (name == "ac4star" || name == "ac4*") return Algorithm::ac4star;
  if (name == "ac6") return Algorithm::ac6;
  throw ConfigError("unknown algorithm '" + std::string(name) + "' (expected ac3, ac4, ac4star or ac6)");
}

std::string_view algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::ac3: return "ac3";
    case Algorithm::ac4: return "ac4";
    case Algorithm::ac4star: return "ac4star";
    case Algorithm::ac6: return "ac6";
  }
  return "unknown";
}

TrimResult run_engine(Algorithm algo, const CsrGraph& g, const CsrGraph* gt, const StatusArray& init,
                      const EngineOptions& opts) {
  std::optional<CsrGraph> owned;
  const bool needs_transpose =
      algo == Algorithm::ac4 || algo == Algorithm::ac4star || (algo == Algorithm::ac3 && opts.check_in_degree);
  if (needs_transpose && gt == nullptr) {
    owned = transpose(g);
    gt = &*owned;
  }
  switch (algo) {
    case Algorithm::ac3: {
      Ac3Options o{opts.workers, opts.chunk_size, opts.max_repetitions, opts.check_in_degree};
      return trim_ac3(g, init, o, gt);
    }
    case Algorithm::ac4:
    case Algorithm::ac4star: {
      Ac4Options o;
      o.workers = opts.workers;
      o.chunk_size = opts.chunk_size;
      o.counter_init = opts.counter_init.value_or(algo == Algorithm::ac4 ? CounterInit::traverse
                                                                         : CounterInit::offset_diff);
      return trim_ac4_par(g, *gt, init, o);
    }
    case Algorithm::ac6: {
      Ac6Options o;
      o.workers = opts.workers;
      o.chunk_size = opts.chunk_size;
      return trim_ac6_par(g, init, o);
    }
  }
  throw ConfigError("unknown algorithm");
}

BenchReport run_bench(const CsrGraph& g, const BenchConfig& cfg) {
  if (cfg.repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (cfg.algorithms.empty()) throw ConfigError("no algorithm selected");
  if (cfg.workers.empty()) throw ConfigError("no worker count selected");
  for (std::size_t p : cfg.workers) {
    if (p < 1) throw ConfigError("worker counts must be >= 1");
  }

  std::vector<std::optional<double>> ratios{std::nullopt};
  if (cfg.sampling) {
    if (cfg.sampling->ratios.empty()) throw ConfigError("sampling needs at least one ratio");
    ratios.assign(cfg.sampling->ratios.begin(), cfg.sampling->ratios.end());
  }

  BenchReport report;
  for (const auto& ratio : ratios) {
    // The sampled input is fixed per ratio so that every run sees the same graph.
    std::optional<CsrGraph> sampled;
    StatusArray init(g.vertex_count());
    if (ratio) {
      if (cfg.sampling->mode == SamplingMode::edges) {
        sampled = sample_edges(g, *ratio, cfg.seed);
      } else {
        init = sample_vertices(g.vertex_count(), *ratio, cfg.seed);
      }
    }
    const CsrGraph& input = sampled ? *sampled : g;
    const CsrGraph gt = transpose(input);
    std::optional<std::vector<bool>> reference;

    for (Algorithm algo : cfg.algorithms) {
      for (std::size_t p : cfg.workers) {
        EngineOptions opts{p, cfg.chunk_size, cfg.max_repetitions, cfg.check_in_degree, cfg.counter_init};
        const std::size_t first = report.rows.size();
        for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
          const TrimResult r = run_engine(algo, input, &gt, init, opts);
          BenchRow row = run_row(algo, p, rep, r);
          row.chunk_size = cfg.chunk_size;
          row.ratio = ratio;
          report.rows.push_back(row);
          // A capped AC-3 run may legitimately stop short of the fixed point.
          if (algo == Algorithm::ac3 && cfg.max_repetitions) continue;
          std::vector<bool> mask = r.status.dead_mask();
          if (!reference) {
            reference = std::move(mask);
          } else if (*reference != mask) {
            report.dead_sets_consistent = false;
          }
        }
        append_summary(report.rows, first);
      }
    }
  }
  return report;
}

BenchReport chunk_sweep(const CsrGraph& g, Algorithm algo, std::size_t workers,
                        const std::vector<std::size_t>& chunk_sizes, std::size_t repetitions) {
  if (chunk_sizes.empty()) throw ConfigError("chunk_sweep needs at least one chunk size");
  if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
  const CsrGraph gt = transpose(g);
  const StatusArray init(g.vertex_count());
  BenchReport report;
  std::optional<std::vector<bool>> reference;
  for (std::size_t chunk : chunk_sizes) {
    std::vector<BenchRow> runs;
    for (std::size_t rep = 0; rep < repetitions; ++rep) {
      EngineOptions opts;
      opts.workers = workers;
      opts.chunk_size = chunk;
      const TrimResult r = run_engine(algo, g, &gt, init, opts);
      runs.push_back(run_row(algo, workers, rep, r));
      std::vector<bool> mask = r.status.dead_mask();
      if (!reference) {
        reference = std::move(mask);
      } else if (*reference != mask) {
        report.dead_sets_consistent = false;
      }
    }
    append_summary(runs, 0);
    BenchRow mean = runs[runs.size() - 2];
    mean.chunk_size = chunk;
    report.rows.push_back(mean);
  }
  return report;
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  bool with_chunk = false;
  bool with_ratio = false;
  for (const auto& row : rows) {
    with_chunk = with_chunk || row.chunk_size.has_value();
    with_ratio = with_ratio || row.ratio.has_value();
  }
  out << "algorithm,P,rep,max_edges_per_worker,total_edges,max_qp,removed,wall_ms";
  if (with_chunk) out << ",chunk_size";
  if (with_ratio) out << ",ratio";
  out << '\n';
  for (const auto& row : rows) {
    out << algorithm_name(row.algorithm) << ',' << row.workers << ',';
    if (row.kind == RowKind::run) {
      out << row.rep;
    } else {
      out << kind_label(row);
    }
    out << ',' << number(row.max_edges_per_worker) << ',' << number(row.total_edges) << ','
        << number(row.max_qp) << ',' << number(row.removed) << ',' << number(row.wall_ms);
    if (with_chunk) out << ',' << (row.chunk_size ? std::to_string(*row.chunk_size) : "");
    if (with_ratio) out << ',' << (row.ratio ? number(*row.ratio) : "");
    out << '\n';
  }
}

void write_json_lines(const std::vector<BenchRow>& rows, std::ostream& out) {
  for (const auto& row : rows) {
    nlohmann::json j;
    j["algorithm"] = algorithm_name(row.algorithm);
    j["P"] = row.workers;
    if (row.kind == RowKind::run) {
      j["rep"] = row.rep;
    } else {
      j["rep"] = kind_label(row);
    }
    j["max_edges_per_worker"] = row.max_edges_per_worker;
    j["total_edges"] = row.total_edges;
    j["max_qp"] = row.max_qp;
    j["removed"] = row.removed;
    j["wall_ms"] = row.wall_ms;
    if (row.chunk_size) j["chunk_size"] = *row.chunk_size;
    if (row.ratio) j["ratio"] = *row.ratio;
    out << j.dump() << '\n';
  }
}

}  // namespace gtrim
