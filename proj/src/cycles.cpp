#include "flagcert/cycles.hpp"

#include <stdexcept>

namespace flagcert {

namespace {

struct CycleSearch {
  int n;
  int length;
  std::vector<uint64_t> adj;
  std::vector<int> dist;   // BFS distance from the target
  std::vector<int> path;
  uint64_t visited = 0;
  int target = -1;

  void bfs_from_target() {
    dist.assign(n, n + 1);
    dist[target] = 0;
    std::vector<int> queue{target};
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      uint64_t nbrs = adj[x];
      while (nbrs) {
        int y = __builtin_ctzll(nbrs);
        nbrs &= nbrs - 1;
        if (dist[y] > dist[x] + 1) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }

  // simple path from `current` to `target` using exactly `remaining` edges
  bool dfs(int current, int remaining) {
    if (remaining == 0) return current == target;
    uint64_t candidates = adj[current] & ~visited;
    while (candidates) {
      int next = __builtin_ctzll(candidates);
      candidates &= candidates - 1;
      if (next == target) {
        if (remaining != 1) continue;
        path.push_back(next);
        return true;
      }
      if (dist[next] > remaining - 1) continue;
      visited |= uint64_t{1} << next;
      path.push_back(next);
      if (dfs(next, remaining - 1)) return true;
      path.pop_back();
      visited &= ~(uint64_t{1} << next);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> cycle_witness(const ColoredGraph& g,
                                              int length, int u, int v) {
  const int n = g.vertex_count();
  if (length < 3 || length > n)
    throw std::invalid_argument("cycle length must satisfy 3 <= L <= n");
  if (!g.has_edge(u, v)) return std::nullopt;

  CycleSearch s;
  s.n = n;
  s.length = length;
  s.adj.resize(n);
  for (int x = 0; x < n; ++x) s.adj[x] = g.adjacency(x);
  s.target = u;
  s.bfs_from_target();
  // u stays unmarked so the closing step can reach it; the dfs only accepts
  // it with exactly one edge left
  s.visited = uint64_t{1} << v;
  s.path = {u, v};
  if (s.dfs(v, length - 1)) {
    s.path.pop_back();  // drop the closing copy of u
    return s.path;
  }
  return std::nullopt;
}

std::set<VertexPair> cycle_edge_set(const ColoredGraph& g, int length) {
  const int n = g.vertex_count();
  if (length < 3 || length > n)
    throw std::invalid_argument("cycle length must satisfy 3 <= L <= n");
  std::set<VertexPair> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      if (cycle_witness(g, length, u, v)) out.insert({u, v});
    }
  return out;
}

bool coloring_is_valid(const ColoredGraph& g, int k) {
  if (k < 2) throw std::invalid_argument("cycle parameter k must be >= 2");
  const int length = 2 * k + 1;
  if (length > g.vertex_count()) return true;  // no such cycles at all
  std::set<VertexPair> cycle_edges = cycle_edge_set(g, length);
  for (auto [u, v] : cycle_edges)
    if (g.color(u, v) == EdgeColor::Blue) return false;
  return true;
}

}  // namespace flagcert
