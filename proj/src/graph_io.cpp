#include "gtrim/graph_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace gtrim {
namespace {

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  return s;
}

// Parses one unsigned integer token and advances `s` past it.
std::uint64_t parse_id(std::string_view& s, std::size_t line_no) {
  s = trim_left(s);
  if (s.empty()) throw ParseError(line_no, "expected two vertex ids");
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw CapacityError("line " + std::to_string(line_no) + ": vertex id overflows id width");
  }
  if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
    throw ParseError(line_no, "malformed vertex id");
  }
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  if (value >= kMaxVertexCount) {
    throw CapacityError("line " + std::to_string(line_no) + ": vertex id " + std::to_string(value) +
                        " overflows 32-bit id width");
  }
  return value;
}

template <class T>
void put_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes;
  for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  out.write(bytes.data(), bytes.size());
}

template <class T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes;
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw IoError("truncated CSR stream");
  }
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(bytes[i]) << (8 * i);
  return value;
}

template <class T>
void put_array_le(std::ostream& out, std::span<const T> values) {
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size_bytes()));
  } else {
    for (T v : values) put_le(out, v);
  }
}

template <class T>
std::vector<T> get_array_le(std::istream& in, std::uint64_t count) {
  std::vector<T> values;
  if constexpr (std::endian::native == std::endian::little) {
    // Grow in bounded steps so a corrupt header cannot force a huge allocation.
    constexpr std::uint64_t kStep = std::uint64_t{1} << 22;
    while (values.size() < count) {
      const std::size_t old = values.size();
      const std::size_t take = static_cast<std::size_t>(std::min<std::uint64_t>(kStep, count - old));
      values.resize(old + take);
      if (!in.read(reinterpret_cast<char*>(values.data() + old),
                   static_cast<std::streamsize>(take * sizeof(T)))) {
        throw IoError("truncated CSR stream");
      }
    }
  } else {
    for (std::uint64_t i = 0; i < count; ++i) values.push_back(get_le<T>(in));
  }
  return values;
}

}  // namespace

CsrGraph load_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::uint64_t declared_n = 0;
  std::uint64_t max_id_plus_one = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = trim_left(line);
    if (s.empty()) continue;
    if (s.front() == '#') {
      s.remove_prefix(1);
      s = trim_left(s);
      if (s.starts_with("n=")) {
        s.remove_prefix(2);
        std::uint64_t n = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
        if (ec != std::errc()) throw ParseError(line_no, "malformed vertex-count header");
        if (n > kMaxVertexCount) throw CapacityError("declared vertex count exceeds 32-bit id width");
        declared_n = n;
      }
      continue;
    }
    const std::uint64_t src = parse_id(s, line_no);
    const std::uint64_t dst = parse_id(s, line_no);
    if (!trim_left(s).empty()) throw ParseError(line_no, "trailing characters after edge");
    max_id_plus_one = std::max({max_id_plus_one, src + 1, dst + 1});
    edges.emplace_back(static_cast<VertexId>(src), static_cast<VertexId>(dst));
  }
  if (in.bad()) throw IoError("failed while reading edge list");
  const std::uint64_t n = std::max(declared_n, max_id_plus_one);
  return CsrGraph::from_edges(static_cast<std::size_t>(n), edges);
}

void write_edge_list(const CsrGraph& g, std::ostream& out) {
  out << "# n=" << g.vertex_count() << '\n';
  std::string buf;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (VertexId w : g.successors(v)) {
      buf.clear();
      buf += std::to_string(v);
      buf += ' ';
      buf += std::to_string(w);
      buf += '\n';
      out << buf;
    }
  }
  if (!out) throw IoError("failed while writing edge list");
}

void write_csr(const CsrGraph& g, std::ostream& out) {
  out.write(kCsrMagic, sizeof(kCsrMagic));
  put_le<std::uint32_t>(out, kCsrVersion);
  put_le<std::uint64_t>(out, g.vertex_count());
  put_le<std::uint64_t>(out, g.edge_count());
  put_array_le(out, g.offsets());
  put_array_le(out, g.targets());
  if (!out) throw IoError("failed while writing CSR stream");
}

CsrGraph read_csr(std::istream& in) {
  char magic[4];
  if (!in.read(magic, sizeof(magic))) throw IoError("truncated CSR stream");
  if (std::memcmp(magic, kCsrMagic, sizeof(magic)) != 0) throw FormatError("bad CSR magic");
  if (const auto version = get_le<std::uint32_t>(in); version != kCsrVersion) {
    throw FormatError("unsupported CSR version " + std::to_string(version));
  }
  const auto n = get_le<std::uint64_t>(in);
  const auto m = get_le<std::uint64_t>(in);
  if (n > kMaxVertexCount) throw FormatError("vertex count exceeds 32-bit id width");
  auto offsets = get_array_le<EdgeIndex>(in, n + 1);
  auto targets = get_array_le<VertexId>(in, m);
  return CsrGraph(std::move(offsets), std::move(targets));
}

GraphFormat detect_format(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  char magic[4] = {};
  in.read(magic, sizeof(magic));
  if (in.gcount() == sizeof(magic) && std::memcmp(magic, kCsrMagic, sizeof(magic)) == 0) {
    return GraphFormat::csr;
  }
  return GraphFormat::edgelist;
}

CsrGraph load_graph(const std::filesystem::path& path) { return load_graph(path, detect_format(path)); }

CsrGraph load_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return format == GraphFormat::csr ? read_csr(in) : load_edge_list(in);
}

void save_graph(const CsrGraph& g, const std::filesystem::path& path, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create " + path.string());
  if (format == GraphFormat::csr) {
    write_csr(g, out);
  } else {
    write_edge_list(g, out);
  }
}

}  // namespace gtrim
