#pragma once

#include <filesystem>
#include <iosfwd>

#include "gtrim/csr_graph.hpp"

namespace gtrim {

/// Reads "src dst" lines. '#' starts a comment line; an optional "# n=<N>"
/// line declares the vertex count so trailing isolated vertices survive.
/// Vertex ids are used as given; n = max(N, 1 + largest id).
CsrGraph load_edge_list(std::istream& in);

/// Writes a "# n=<N>" header followed by one "src dst" line per edge.
void write_edge_list(const CsrGraph& g, std::ostream& out);

// Binary layout, little-endian throughout:
//   "CSRG" | u32 version=1 | u64 n | u64 m | u64 offsets[n+1] | u32 targets[m]
inline constexpr char kCsrMagic[4] = {'C', 'S', 'R', 'G'};
inline constexpr std::uint32_t kCsrVersion = 1;

void write_csr(const CsrGraph& g, std::ostream& out);
CsrGraph read_csr(std::istream& in);

enum class GraphFormat { edgelist, csr };

/// Sniffs the magic bytes; anything that is not binary CSR is an edge list.
GraphFormat detect_format(const std::filesystem::path& path);

CsrGraph load_graph(const std::filesystem::path& path);
CsrGraph load_graph(const std::filesystem::path& path, GraphFormat format);
void save_graph(const CsrGraph& g, const std::filesystem::path& path, GraphFormat format);

}  // namespace gtrim
