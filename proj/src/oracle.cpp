#include "gtrim/oracle.hpp"

#include <algorithm>

namespace gtrim {
namespace {

bool has_live_successor(const CsrGraph& g, const std::vector<bool>& dead, VertexId v) {
  for (VertexId w : g.successors(v)) {
    if (!dead[w]) return true;
  }
  return false;
}

void check_size(const CsrGraph& g, std::size_t n) {
  if (n != g.vertex_count()) throw ValidationError("status size does not match graph");
}

}  // namespace

std::size_t OracleResult::dead_count() const { return static_cast<std::size_t>(std::count(dead.begin(), dead.end(), true)); }

std::vector<VertexId> OracleResult::dead_set() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < dead.size(); ++v) {
    if (dead[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

OracleResult fixed_point_trim(const CsrGraph& g, const StatusArray& init) {
  check_size(g, init.size());
  const std::size_t n = g.vertex_count();
  OracleResult result;
  result.dead = init.dead_mask();
  std::vector<VertexId> killed;
  do {
    ++result.rounds;
    killed.clear();
    for (VertexId v = 0; v < n; ++v) {
      if (!result.dead[v] && !has_live_successor(g, result.dead, v)) killed.push_back(v);
    }
    for (VertexId v : killed) result.dead[v] = true;
  } while (!killed.empty());
  return result;
}

OracleResult fixed_point_trim(const CsrGraph& g) { return fixed_point_trim(g, StatusArray(g.vertex_count())); }

OracleResult fixed_point_trim_in_order(const CsrGraph& g, const StatusArray& init,
                                       std::span<const VertexId> order) {
  check_size(g, init.size());
  if (order.size() != g.vertex_count()) throw ValidationError("scan order must list every vertex once");
  OracleResult result;
  result.dead = init.dead_mask();
  bool changed = true;
  while (changed) {
    ++result.rounds;
    changed = false;
    for (VertexId v : order) {
      if (!result.dead[v] && !has_live_successor(g, result.dead, v)) {
        result.dead[v] = true;
        changed = true;
      }
    }
  }
  return result;
}

bool check_sound(const CsrGraph& g, const StatusArray& status) {
  check_size(g, status.size());
  const std::vector<bool> dead = status.dead_mask();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (dead[v] && has_live_successor(g, dead, v)) return false;
  }
  return true;
}

bool check_sound(const CsrGraph& g, const StatusArray& status, const StatusArray& init) {
  check_size(g, status.size());
  check_size(g, init.size());
  const std::vector<bool> dead = status.dead_mask();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (dead[v] && init.is_live(v) && has_live_successor(g, dead, v)) return false;
  }
  return true;
}

bool check_complete(const CsrGraph& g, const StatusArray& status) {
  check_size(g, status.size());
  const std::vector<bool> dead = status.dead_mask();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!dead[v] && !has_live_successor(g, dead, v)) return false;
  }
  return true;
}

bool same_dead_set(const StatusArray& status, const OracleResult& oracle) {
  return status.dead_mask() == oracle.dead;
}

}  // namespace gtrim
