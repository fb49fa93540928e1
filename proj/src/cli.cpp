#include "gtrim/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gtrim/analysis.hpp"
#include "gtrim/bench.hpp"
#include "gtrim/generators.hpp"
#include "gtrim/graph_io.hpp"
#include "gtrim/oracle.hpp"
#include "gtrim/sampling.hpp"

namespace gtrim {
namespace {

struct GraphSource {
  std::string path;
  std::string graph_format;  // "", "edgelist" or "csr"
  std::string gen;           // kind:n[:m]
};

struct RunFlags {
  std::vector<std::string> algos;
  std::vector<std::size_t> workers;
  std::size_t chunk_size = 4096;
  std::size_t reps = 50;
  std::uint64_t seed = 42;
  std::vector<double> sample_edges;
  std::vector<double> sample_vertices;
  std::optional<std::uint64_t> max_reps;
  bool check_indegree = false;
  std::string counter_init;
  std::string out;
  std::string format = "csv";
  bool verify = false;
  std::vector<std::size_t> chunk_sweep;
  std::string to;
};

std::size_t default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::uint64_t parse_count(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ArgumentError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

/// kind:n[:m] with kind one of er, ba, rmat (need m) or chain, cycle,
/// star-in, star-out (n only).
CsrGraph generate(const std::string& desc, std::uint64_t seed) {
  std::vector<std::string> parts;
  std::stringstream ss(desc);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3) throw ArgumentError("generator must be kind:n[:m], got '" + desc + "'");
  const std::string& kind = parts[0];
  const std::uint64_t n = parse_count(parts[1], "vertex count");
  const bool takes_m = kind == "er" || kind == "ba" || kind == "rmat";
  if (takes_m != (parts.size() == 3)) throw ArgumentError("generator '" + kind + "' has the wrong number of fields");
  const std::uint64_t m = takes_m ? parse_count(parts[2], "edge count") : 0;
  if (kind == "er") return gen_er(n, m, seed);
  if (kind == "ba") return gen_ba(n, m, seed);
  if (kind == "rmat") return gen_rmat(n, m, seed);
  if (kind == "chain") return make_chain(n);
  if (kind == "cycle") return make_cycle(n);
  if (kind == "star-in") return make_star(n, true);
  if (kind == "star-out") return make_star(n, false);
  throw ArgumentError("unknown generator '" + kind + "'");
}

GraphFormat parse_format(const std::string& name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "csr") return GraphFormat::csr;
  throw ArgumentError("unknown graph format '" + name + "'");
}

CsrGraph load_source(const GraphSource& src, std::uint64_t seed) {
  if (src.path.empty() == src.gen.empty()) throw ArgumentError("give exactly one graph source: a path or --gen");
  if (!src.gen.empty()) return generate(src.gen, seed);
  if (src.graph_format.empty()) return load_graph(src.path);
  return load_graph(src.path, parse_format(src.graph_format));
}

std::optional<CounterInit> parse_counter_init(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name == "traverse") return CounterInit::traverse;
  if (name == "offset" || name == "offset_diff") return CounterInit::offset_diff;
  throw ArgumentError("unknown counter init '" + name + "' (traverse or offset_diff)");
}

std::vector<Algorithm> parse_algorithms(const std::vector<std::string>& names) {
  std::vector<Algorithm> algos;
  for (const auto& name : names) algos.push_back(parse_algorithm(name));
  if (algos.empty()) algos.push_back(Algorithm::ac6);
  return algos;
}

void add_source(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("graph", src.path, "Graph file (edge list or CSR binary)");
  cmd->add_option("--gen", src.gen, "Generate instead: er|ba|rmat:n:m, chain|cycle|star-in|star-out:n");
  cmd->add_option("--graph-format", src.graph_format, "Input format, detected when omitted")
      ->check(CLI::IsMember({"edgelist", "csr"}));
}

void add_engine_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--algo", f.algos, "ac3, ac4, ac4star or ac6 (repeatable)")->take_all();
  cmd->add_option("--chunk-size", f.chunk_size, "Vertices per scheduling chunk")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Seed for generators and sampling");
  cmd->add_option("--max-reps", f.max_reps, "AC-3: cap on sweeps");
  cmd->add_flag("--check-indegree", f.check_indegree, "AC-3: also remove vertices without LIVE predecessors");
  cmd->add_option("--counter-init", f.counter_init, "AC-4: traverse or offset_diff");
  cmd->add_option("--out", f.out, "Write result rows to this file");
  cmd->add_option("--format", f.format, "Row format for --out")->check(CLI::IsMember({"csv", "json"}));
}

void write_rows(const std::vector<BenchRow>& rows, const RunFlags& f, std::ostream& fallback) {
  auto emit = [&](std::ostream& os) {
    if (f.format == "json") {
      write_json_lines(rows, os);
    } else {
      write_csv(rows, os);
    }
  };
  if (f.out.empty()) {
    emit(fallback);
    return;
  }
  std::ofstream file(f.out);
  if (!file) throw IoError("cannot open '" + f.out + "' for writing");
  emit(file);
  if (!file) throw IoError("failed writing '" + f.out + "'");
}

std::string percent(std::uint64_t part, std::uint64_t whole) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << (whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole))
     << '%';
  return os.str();
}

int cmd_trim(const GraphSource& src, const RunFlags& f, std::ostream& out, std::ostream& err) {
  if (f.sample_edges.size() > 1 || f.sample_vertices.size() > 1) throw ArgumentError("trim takes one sampling ratio");
  if (!f.sample_edges.empty() && !f.sample_vertices.empty()) throw ArgumentError("sample edges or vertices, not both");
  CsrGraph g = load_source(src, f.seed);
  if (!f.sample_edges.empty()) g = sample_edges(g, f.sample_edges.front(), f.seed);
  StatusArray init(g.vertex_count());
  if (!f.sample_vertices.empty()) init = sample_vertices(g.vertex_count(), f.sample_vertices.front(), f.seed);

  const std::size_t workers = f.workers.empty() ? default_workers() : f.workers.front();
  EngineOptions opts{workers, f.chunk_size, f.max_reps, f.check_indegree, parse_counter_init(f.counter_init)};
  const CsrGraph gt = transpose(g);
  const std::size_t n = g.vertex_count();
  out << "seed=" << f.seed << " n=" << n << " m=" << g.edge_count() << '\n';

  std::optional<OracleResult> oracle;
  if (f.verify) oracle = fixed_point_trim(g, init);
  bool ok = true;
  std::optional<std::vector<bool>> first_dead;
  std::vector<BenchRow> rows;
  for (Algorithm algo : parse_algorithms(f.algos)) {
    const TrimResult r = run_engine(algo, g, &gt, init, opts);
    const TrimMetrics& mt = r.metrics;
    const std::uint64_t dead = r.status.dead_count();
    out << "algorithm=" << algorithm_name(algo) << " P=" << workers << " removed=" << mt.removed
        << " dead=" << dead << " trim=" << percent(dead, n) << " rounds=" << mt.rounds
        << " total_edges=" << mt.total_edges() << " max_edges_per_worker=" << mt.max_edges_per_worker()
        << " max_qp=" << mt.max_qp << " wall_ms=" << std::fixed << std::setprecision(3) << mt.wall_ms()
        << std::defaultfloat << '\n';
    BenchRow row;
    row.algorithm = algo;
    row.workers = workers;
    row.max_edges_per_worker = static_cast<double>(mt.max_edges_per_worker());
    row.total_edges = static_cast<double>(mt.total_edges());
    row.max_qp = static_cast<double>(mt.max_qp);
    row.removed = static_cast<double>(mt.removed);
    row.wall_ms = mt.wall_ms();
    rows.push_back(row);

    if (!f.verify) continue;
    // A capped AC-3 run is only required to be sound.
    const bool capped = algo == Algorithm::ac3 && f.max_reps.has_value();
    const bool sound = check_sound(g, r.status, init);
    const bool complete = capped || check_complete(g, r.status);
    const bool matches = capped || same_dead_set(r.status, *oracle);
    std::vector<bool> mask = r.status.dead_mask();
    bool agrees = true;
    if (!capped) {
      if (!first_dead) {
        first_dead = std::move(mask);
      } else {
        agrees = *first_dead == mask;
      }
    }
    out << "verify " << algorithm_name(algo) << ": sound=" << (sound ? "yes" : "no")
        << " complete=" << (complete ? "yes" : "no") << " oracle=" << (matches ? "match" : "MISMATCH")
        << " oracle_dead=" << oracle->dead_count() << '\n';
    if (!(sound && complete && matches && agrees)) ok = false;
  }
  if (!f.out.empty()) write_rows(rows, f, out);
  if (!ok) {
    err << "verification failed\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_bench(const GraphSource& src, const RunFlags& f, std::ostream& out, std::ostream& err) {
  const CsrGraph g = load_source(src, f.seed);
  const std::vector<std::size_t> workers = f.workers.empty() ? std::vector<std::size_t>{default_workers()} : f.workers;
  out << "# seed=" << f.seed << " n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
  BenchReport report;
  if (!f.chunk_sweep.empty()) {
    const auto algos = parse_algorithms(f.algos);
    for (Algorithm algo : algos) {
      for (std::size_t p : workers) {
        BenchReport part = chunk_sweep(g, algo, p, f.chunk_sweep, f.reps);
        report.rows.insert(report.rows.end(), part.rows.begin(), part.rows.end());
        report.dead_sets_consistent = report.dead_sets_consistent && part.dead_sets_consistent;
      }
    }
  } else {
    if (!f.sample_edges.empty() && !f.sample_vertices.empty()) throw ArgumentError("sample edges or vertices, not both");
    BenchConfig cfg;
    cfg.algorithms = parse_algorithms(f.algos);
    cfg.workers = workers;
    cfg.chunk_size = f.chunk_size;
    cfg.repetitions = f.reps;
    cfg.seed = f.seed;
    cfg.max_repetitions = f.max_reps;
    cfg.check_in_degree = f.check_indegree;
    cfg.counter_init = parse_counter_init(f.counter_init);
    if (!f.sample_edges.empty()) cfg.sampling = SamplingPlan{SamplingMode::edges, f.sample_edges};
    if (!f.sample_vertices.empty()) cfg.sampling = SamplingPlan{SamplingMode::vertices, f.sample_vertices};
    report = run_bench(g, cfg);
  }
  write_rows(report.rows, f, out);
  if (!report.dead_sets_consistent) {
    err << "runs disagreed on the DEAD set\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_gen(const GraphSource& src, const RunFlags& f, std::ostream& out) {
  if (src.gen.empty()) throw ArgumentError("gen needs --gen kind:n[:m]");
  if (f.out.empty()) throw ArgumentError("gen needs --out");
  const CsrGraph g = generate(src.gen, f.seed);
  save_graph(g, f.out, parse_format(f.to.empty() ? "csr" : f.to));
  out << "seed=" << f.seed << " n=" << g.vertex_count() << " m=" << g.edge_count() << " -> " << f.out << '\n';
  return kExitOk;
}

int cmd_stats(const GraphSource& src, const RunFlags& f, std::ostream& out) {
  const CsrGraph g = load_source(src, f.seed);
  const GraphStats s = compute_stats(g);
  out << "n=" << s.n << '\n'
      << "m=" << s.m << '\n'
      << "deg_in=" << s.max_in_degree << '\n'
      << "deg_out=" << s.max_out_degree << '\n'
      << "alpha=" << s.alpha << '\n'
      << "trim=" << std::fixed << std::setprecision(2) << 100.0 * s.trim_percent << "%\n";
  return kExitOk;
}

int cmd_convert(const GraphSource& src, const RunFlags& f, std::ostream& out) {
  if (src.path.empty()) throw ArgumentError("convert needs an input file");
  if (f.out.empty()) throw ArgumentError("convert needs --out");
  const GraphFormat in_format = src.graph_format.empty() ? detect_format(src.path) : parse_format(src.graph_format);
  const CsrGraph g = load_graph(src.path, in_format);
  GraphFormat to_format = in_format == GraphFormat::csr ? GraphFormat::edgelist : GraphFormat::csr;
  if (!f.to.empty()) to_format = parse_format(f.to);
  save_graph(g, f.out, to_format);
  out << "n=" << g.vertex_count() << " m=" << g.edge_count() << " -> " << f.out << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parallel graph trimming: remove vertices that cannot reach a cycle."};
  app.require_subcommand(1);
  GraphSource src;
  RunFlags f;

  CLI::App* trim = app.add_subcommand("trim", "Run trimming engines on one graph");
  add_source(trim, src);
  add_engine_flags(trim, f);
  trim->add_option("--workers", f.workers, "Worker threads (default: logical cores)")->expected(1);
  trim->add_option("--sample-edges", f.sample_edges, "Keep each edge with probability R");
  trim->add_option("--sample-vertices", f.sample_vertices, "Keep each vertex LIVE with probability R");
  trim->add_flag("--verify", f.verify, "Cross-check against the brute-force oracle");

  CLI::App* bench = app.add_subcommand("bench", "Repeated timed runs, CSV or JSON-lines rows");
  add_source(bench, src);
  add_engine_flags(bench, f);
  bench->add_option("--workers", f.workers, "Worker counts, e.g. 1,2,4,8,16")->delimiter(',')->take_all();
  bench->add_option("--reps", f.reps, "Repetitions per configuration")->check(CLI::PositiveNumber);
  bench->add_option("--sample-edges", f.sample_edges, "Edge sampling ratios")->delimiter(',')->take_all();
  bench->add_option("--sample-vertices", f.sample_vertices, "Vertex sampling ratios")->delimiter(',')->take_all();
  bench->add_option("--chunk-sweep", f.chunk_sweep, "Chunk sizes to sweep instead")->delimiter(',')->take_all();

  CLI::App* gen = app.add_subcommand("gen", "Write a synthetic graph");
  gen->add_option("--gen", src.gen, "er|ba|rmat:n:m, chain|cycle|star-in|star-out:n")->required();
  gen->add_option("--seed", f.seed, "Generator seed");
  gen->add_option("--out", f.out, "Output path")->required();
  gen->add_option("--to", f.to, "Output format (default csr)")->check(CLI::IsMember({"csr", "edgelist"}));

  CLI::App* stats = app.add_subcommand("stats", "n, m, max degrees, peeling steps, trimmable share");
  add_source(stats, src);
  stats->add_option("--seed", f.seed, "Generator seed");

  CLI::App* convert = app.add_subcommand("convert", "Edge list <-> CSR binary");
  convert->add_option("graph", src.path, "Input file")->required();
  convert->add_option("--graph-format", src.graph_format, "Input format, detected when omitted")
      ->check(CLI::IsMember({"edgelist", "csr"}));
  convert->add_option("--out", f.out, "Output path")->required();
  convert->add_option("--to", f.to, "Output format")->check(CLI::IsMember({"csr", "edgelist"}));

  CLI::App* verify = app.add_subcommand("verify", "trim --verify with every engine");
  add_source(verify, src);
  add_engine_flags(verify, f);
  verify->add_option("--workers", f.workers, "Worker threads (default: logical cores)")->expected(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*trim) return cmd_trim(src, f, out, err);
    if (*bench) return cmd_bench(src, f, out, err);
    if (*gen) return cmd_gen(src, f, out);
    if (*stats) return cmd_stats(src, f, out);
    if (*convert) return cmd_convert(src, f, out);
    if (*verify) {
      RunFlags all = f;
      all.verify = true;
      if (all.algos.empty()) all.algos = {"ac3", "ac4", "ac4star", "ac6"};
      return cmd_trim(src, all, out, err);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gtrim
