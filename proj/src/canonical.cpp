#include "flagcert/canonical.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace flagcert {

namespace {

constexpr int kCanonMaxVertices = 16;

// Search state shared across the individualization-refinement tree.
struct CanonSearch {
  int n;
  uint8_t color[kCanonMaxVertices][kCanonMaxVertices];  // symmetric

  std::string best;                  // lexicographically smallest string so far
  std::vector<int> best_labeling;    // position -> vertex
  std::vector<std::vector<int>> automorphisms;

  std::string string_for(const std::vector<int>& order) const {
    std::string s;
    s.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        s.push_back(static_cast<char>('0' + color[order[i]][order[j]]));
    return s;
  }

  // Stable refinement: cells keyed by (previous cell, counts of
  // (neighbour cell, edge color) pairs). The count rows have a fixed index
  // order, so cell order is data-determined and invariant under relabeling.
  void refine(std::vector<int>& cell_of) const {
    uint8_t row[kCanonMaxVertices][kCanonMaxVertices * 4];
    int order[kCanonMaxVertices];
    while (true) {
      int cells = 0;
      for (int v = 0; v < n; ++v) cells = std::max(cells, cell_of[v] + 1);
      const size_t width = static_cast<size_t>(cells) * 4;
      for (int v = 0; v < n; ++v) {
        std::memset(row[v], 0, width);
        for (int u = 0; u < n; ++u) {
          if (u == v) continue;
          ++row[v][cell_of[u] * 4 + color[v][u]];
        }
      }
      for (int i = 0; i < n; ++i) order[i] = i;
      std::sort(order, order + n, [&](int a, int b) {
        if (cell_of[a] != cell_of[b]) return cell_of[a] < cell_of[b];
        return std::memcmp(row[a], row[b], width) < 0;
      });
      std::vector<int> next(n);
      int id = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0) {
          int a = order[i - 1], b = order[i];
          if (cell_of[a] != cell_of[b] ||
              std::memcmp(row[a], row[b], width) != 0)
            ++id;
        }
        next[order[i]] = id;
      }
      if (next == cell_of) return;
      cell_of = std::move(next);
    }
  }

  void search(std::vector<int> cell_of, std::vector<int> individualized) {
    refine(cell_of);

    // find the first smallest non-singleton cell
    int max_cell = 0;
    for (int v = 0; v < n; ++v) max_cell = std::max(max_cell, cell_of[v]);
    std::vector<int> cell_size(max_cell + 1, 0);
    for (int v = 0; v < n; ++v) ++cell_size[cell_of[v]];

    int target = -1;
    for (int c = 0; c <= max_cell; ++c) {
      if (cell_size[c] > 1 &&
          (target == -1 || cell_size[c] < cell_size[target]))
        target = c;
    }

    if (target == -1) {
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return cell_of[a] < cell_of[b]; });
      std::string s = string_for(order);
      if (best.empty() || s < best) {
        best = std::move(s);
        best_labeling = order;
      } else if (s == best) {
        // equal leaves give automorphisms: vertex best_labeling[i] maps to
        // order[i]
        std::vector<int> aut(n);
        for (int i = 0; i < n; ++i) aut[best_labeling[i]] = order[i];
        if (automorphisms.size() < 64) automorphisms.push_back(std::move(aut));
      }
      return;
    }

    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (cell_of[v] == target) members.push_back(v);

    // orbit pruning under automorphisms fixing the individualized prefix
    std::vector<int> rep(n);
    for (int v = 0; v < n; ++v) rep[v] = v;
    auto find = [&](int v) {
      while (rep[v] != v) v = rep[v] = rep[rep[v]];
      return v;
    };
    for (const auto& aut : automorphisms) {
      bool fixes_prefix = true;
      for (int u : individualized)
        if (aut[u] != u) {
          fixes_prefix = false;
          break;
        }
      if (!fixes_prefix) continue;
      for (int v : members) {
        int a = find(v), b = find(aut[v]);
        if (a != b) rep[std::max(a, b)] = std::min(a, b);
      }
    }

    for (int v : members) {
      if (find(v) != v) continue;
      std::vector<int> child = cell_of;
      // individualize v: its own cell strictly before the rest of the cell
      for (int u = 0; u < n; ++u)
        if (child[u] > target || (child[u] == target && u != v)) ++child[u];
      individualized.push_back(v);
      search(std::move(child), individualized);
      individualized.pop_back();
    }
  }
};

}  // namespace

CanonResult canonical_form_full(const ColoredGraph& g) {
  const int n = g.vertex_count();
  if (n > kCanonMaxVertices)
    throw std::invalid_argument("canonical form supports at most 16 vertices");
  if (n == 0) return {"0:", {}};

  CanonSearch s;
  s.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      s.color[u][v] =
          u == v ? 0 : static_cast<uint8_t>(g.color(u, v));

  s.search(std::vector<int>(n, 0), {});

  CanonResult result;
  result.key = std::to_string(n) + ":" + s.best;
  result.labeling = s.best_labeling;
  return result;
}

CanonicalForm canonical_form(const ColoredGraph& g) {
  return canonical_form_full(g).key;
}

ColoredGraph canonical_representative(const ColoredGraph& g) {
  return ColoredGraph::decode(canonical_form(g));
}

std::vector<std::vector<int>> automorphisms(const ColoredGraph& g) {
  const int n = g.vertex_count();
  if (n > 8)
    throw std::invalid_argument("brute-force automorphisms capped at 8 vertices");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.color(perm[u], perm[v]) != g.color(u, v)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace flagcert
