#include "flagcert/extremal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "flagcert/canonical.hpp"
#include "flagcert/parallel.hpp"

namespace flagcert {

long long edge_budget(long long n) { return n * n / 4 + 1; }

namespace {

void complete_join(ColoredGraph& g, const std::vector<int>& xs,
                   const std::vector<int>& ys) {
  for (int x : xs)
    for (int y : ys) g.set_color(x, y, EdgeColor::Red);
}

void make_clique(ColoredGraph& g, const std::vector<int>& xs) {
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      g.set_color(xs[i], xs[j], EdgeColor::Red);
}

std::vector<int> range_vec(int from, int to) {  // [from, to)
  std::vector<int> out;
  for (int v = from; v < to; ++v) out.push_back(v);
  return out;
}

}  // namespace

ColoredGraph clique_bipartite_construction(int n) {
  if (n < 5) throw std::invalid_argument("construction G1 needs n >= 5");
  const int clique = (2 * n + 4) / 3;
  const int bipartite = (n + 1) / 3;
  if (clique + bipartite - 1 != n)
    throw std::logic_error("construction G1 size arithmetic broke");

  ColoredGraph g(n);
  make_clique(g, range_vec(0, clique));
  // bipartite block on the cut vertex clique-1 plus the remaining vertices
  std::vector<int> part1{clique - 1};
  for (int v = clique; v < clique + (bipartite - 1) / 2; ++v)
    part1.push_back(v);
  std::vector<int> part2 = range_vec(clique + (bipartite - 1) / 2, n);
  if (static_cast<int>(part1.size() + part2.size()) != bipartite)
    throw std::logic_error("construction G1 bipartite split broke");
  complete_join(g, part1, part2);
  return g;
}

ColoredGraph clique_bipartite_construction_colored(int n) {
  ColoredGraph g = clique_bipartite_construction(n);
  const int clique = (2 * n + 4) / 3;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      bool in_clique = u < clique && v < clique;
      g.set_color(u, v, in_clique ? EdgeColor::Red : EdgeColor::Blue);
    }
  return g;
}

ColoredGraph path_blowup_construction(int n, const Quadruple& q) {
  if (q.sum() != n)
    throw std::invalid_argument("quadruple does not sum to n");
  if (q.a < 0 || q.b < 0 || q.c < 0 || q.d < 0)
    throw std::invalid_argument("quadruple has a negative part");
  ColoredGraph g(n);
  int a_end = static_cast<int>(q.a);
  int b_end = a_end + static_cast<int>(q.b);
  int c_end = b_end + static_cast<int>(q.c);
  std::vector<int> A = range_vec(0, a_end);
  std::vector<int> B = range_vec(a_end, b_end);
  std::vector<int> C = range_vec(b_end, c_end);
  std::vector<int> D = range_vec(c_end, n);
  complete_join(g, A, B);
  complete_join(g, B, C);
  complete_join(g, C, D);
  make_clique(g, D);
  return g;
}

BlowupEdgeCounts blowup_edge_counts(const Quadruple& q) {
  BlowupEdgeCounts counts;
  counts.cycle = q.b * q.c + q.c * q.d + q.d * (q.d - 1) / 2;
  counts.total = q.a * q.b + counts.cycle;
  return counts;
}

QpSolution solve_extremal_qp(long long n) {
  if (n < 5) throw std::invalid_argument("QP needs n >= 5");
  QpSolution solution;
  solution.n = n;
  const long long quarter = n * n / 4;  // constraint is "> n^2/4", i.e. > quarter
                                        // when 4 | n^2, else >= quarter + 1 anyway

  // For fixed (a, b) the constraint value ab + bc + cd + C(d,2) with
  // d = n - a - b - c is maximized at c = b (the increment at c is b - c).
  auto constraint_value = [&](long long a, long long b, long long c) {
    long long d = n - a - b - c;
    return a * b + b * c + c * d + d * (d - 1) / 2;
  };
  auto feasible_ab = [&](long long a, long long b) {
    long long c = std::min(b, n - a - b);
    return 4 * constraint_value(a, b, c) > n * n;
  };

  long long best = -1;
  for (long long a = 0; a <= n; ++a)
    for (long long b = 0; a + b <= n; ++b) {
      if (a * b < best) continue;
      if (!feasible_ab(a, b)) continue;
      if (a * b > best) best = a * b;
    }
  solution.optimal_ab = best;
  if (best < 0) return solution;

  for (long long a = 0; a <= n; ++a)
    for (long long b = 0; a + b <= n; ++b) {
      if (a * b != best) continue;
      for (long long c = 0; a + b + c <= n; ++c) {
        long long value = constraint_value(a, b, c);
        if (4 * value > n * n) {
          solution.maximizers.push_back(Quadruple{a, b, c, n - a - b - c});
          solution.feasibility_margin.push_back(value - quarter);
        }
      }
    }
  return solution;
}

Quadruple default_blowup_quadruple(long long n) {
  QpSolution solution = solve_extremal_qp(n);
  if (solution.maximizers.empty())
    throw std::runtime_error("QP infeasible at n = " + std::to_string(n));
  return *std::min_element(solution.maximizers.begin(),
                           solution.maximizers.end());
}

long long f_formula(long long n) {
  if (n < 1) throw std::invalid_argument("f_formula needs n >= 1");
  const long long budget = edge_budget(n);
  const long long product = budget - ((n + 4) / 6) * ((n + 1) / 6);

  long long table;
  switch (n % 6) {
    case 0: table = 2 * n * n / 9 + 1; break;
    case 1: table = (4 * n * n + n + 13) / 18; break;
    case 2: table = (4 * n * n - n + 22) / 18; break;
    case 3: table = 2 * n * n / 9 + 1; break;
    case 4: table = (4 * n * n + n + 22) / 18; break;
    default: table = (4 * n * n - n + 13) / 18; break;
  }

  const long long structural = budget - (((n - 2) / 6) + 1) * ((n + 1) / 6);

  if (product != table || product != structural)
    throw std::logic_error("f_formula representations disagree at n = " +
                           std::to_string(n));
  return product;
}

ExtremalParts extremal_parts(long long n) {
  ExtremalParts parts;
  parts.a = (n - 2) / 6;
  parts.b = (n + 1) / 6;
  parts.c = 1;
  parts.d = (2 * n + 1) / 3;
  return parts;
}

ColoredGraph extremal_structure(int n) {
  if (n < 7) throw std::invalid_argument("extremal structure needs n >= 7");
  ExtremalParts parts = extremal_parts(n);
  if (parts.a + parts.b + parts.c + parts.d != n)
    throw std::logic_error("extremal structure parts do not sum to n");

  const int a_end = static_cast<int>(parts.a);
  const int b_end = a_end + static_cast<int>(parts.b);
  const int c_vertex = b_end;
  const int d_begin = b_end + 1;

  ColoredGraph g(n);
  std::vector<int> A = range_vec(0, a_end);
  std::vector<int> B = range_vec(a_end, b_end);
  std::vector<int> D = range_vec(d_begin, n);
  complete_join(g, A, B);
  complete_join(g, {c_vertex}, B);
  complete_join(g, {c_vertex}, D);

  // fill D with a clique minus rounds of a round-robin schedule until the
  // exact edge budget is met
  const long long used = (parts.a + 1) * parts.b + parts.d;
  const long long d_pairs = parts.d * (parts.d - 1) / 2;
  const long long needed = edge_budget(n) - used;
  if (needed < 0 || needed > d_pairs)
    throw std::logic_error("extremal structure edge budget unreachable inside D");
  long long to_remove = d_pairs - needed;

  make_clique(g, D);
  // circle method: vertex mm-1 fixed, others rotate; each round is a
  // (near-)perfect matching, so removals spread evenly over D
  const int m = static_cast<int>(parts.d);
  const int mm = m % 2 == 0 ? m : m + 1;  // phantom vertex for odd m
  for (int round = 0; round < mm - 1 && to_remove > 0; ++round) {
    for (int i = 0; i < mm / 2 && to_remove > 0; ++i) {
      int x = i == 0 ? mm - 1 : (round + i) % (mm - 1);
      int y = (round - i + mm - 1) % (mm - 1);
      if (x >= m || y >= m || x == y) continue;  // phantom pairings skipped
      g.set_color(D[x], D[y], EdgeColor::None);
      --to_remove;
    }
  }
  if (to_remove > 0)
    throw std::logic_error("round-robin removal failed to reach the budget");
  if (g.edge_count() != edge_budget(n))
    throw std::logic_error("extremal structure missed the edge budget");
  return g;
}

// ---------------------------------------------------------------------------
// brute-force oracle

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace

ExtremalReport brute_force_min(int n, int cycle_length) {
  if (n > 9) throw std::out_of_range("oracle capped at n <= 9");
  if (cycle_length != 3 && cycle_length != 5 && cycle_length != 7 &&
      cycle_length != 9)
    throw std::invalid_argument("cycle length must be one of 3,5,7,9");
  if (cycle_length > n)
    throw std::invalid_argument("cycle length exceeds vertex count");

  ExtremalReport report;
  report.n = n;
  report.cycle_length = cycle_length;
  report.budget = edge_budget(n);

  // isomorph-free generation: add edges one at a time, dedupe by canonical
  // key at every level
  std::set<CanonicalForm> current{ColoredGraph(n).encode()};
  SearchStats stats;
  for (long long m = 1; m <= report.budget; ++m) {
    std::vector<CanonicalForm> keys(current.begin(), current.end());
    std::vector<std::set<CanonicalForm>> partial(keys.size());
    parallel_for(keys.size(), [&](size_t idx) {
      ColoredGraph g = ColoredGraph::decode(keys[idx]);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          g.set_color(u, v, EdgeColor::Red);
          partial[idx].insert(canonical_form(g));
          g.set_color(u, v, EdgeColor::None);
        }
    });
    std::set<CanonicalForm> next;
    for (const auto& part : partial) next.insert(part.begin(), part.end());
    stats.canonical_calls +=
        static_cast<long long>(keys.size()) * (n * (n - 1) / 2);
    stats.classes_total += static_cast<long long>(next.size());
    current = std::move(next);
  }
  stats.classes_with_budget = static_cast<long long>(current.size());

  std::vector<CanonicalForm> keys(current.begin(), current.end());
  std::vector<long long> cycle_counts(keys.size());
  parallel_for(keys.size(), [&](size_t idx) {
    ColoredGraph g = ColoredGraph::decode(keys[idx]);
    cycle_counts[idx] =
        static_cast<long long>(cycle_edge_set(g, cycle_length).size());
  });

  long long best = -1;
  for (size_t i = 0; i < keys.size(); ++i)
    if (best < 0 || cycle_counts[i] < best) best = cycle_counts[i];
  report.min_cycle_edges = best;
  for (size_t i = 0; i < keys.size(); ++i)
    if (cycle_counts[i] == best)
      report.witnesses.push_back(ColoredGraph::decode(keys[i]));
  report.stats = stats;
  return report;
}

long long brute_force_min_raw(int n, int cycle_length) {
  if (n > 7) throw std::out_of_range("raw oracle capped at n <= 7");
  const long long budget = edge_budget(n);
  std::vector<std::pair<int, int>> pairs = all_pairs(n);
  const int total = static_cast<int>(pairs.size());

  long long best = -1;
  std::vector<int> chosen(budget);
  for (long long i = 0; i < budget; ++i) chosen[i] = static_cast<int>(i);
  while (true) {
    ColoredGraph g(n);
    for (int idx : chosen)
      g.set_color(pairs[idx].first, pairs[idx].second, EdgeColor::Red);
    long long cycles =
        static_cast<long long>(cycle_edge_set(g, cycle_length).size());
    if (best < 0 || cycles < best) best = cycles;

    int i = static_cast<int>(budget) - 1;
    while (i >= 0 && chosen[i] == total - static_cast<int>(budget) + i) --i;
    if (i < 0) break;
    ++chosen[i];
    for (int j = i + 1; j < static_cast<int>(budget); ++j)
      chosen[j] = chosen[j - 1] + 1;
  }
  return best;
}

bool duality_check(const ExtremalReport& report) {
  // independent second pass over the same search space, maximizing the
  // number of edges missing from every L-cycle
  std::set<CanonicalForm> current{ColoredGraph(report.n).encode()};
  for (long long m = 1; m <= report.budget; ++m) {
    std::vector<CanonicalForm> keys(current.begin(), current.end());
    std::vector<std::set<CanonicalForm>> partial(keys.size());
    parallel_for(keys.size(), [&](size_t idx) {
      ColoredGraph g = ColoredGraph::decode(keys[idx]);
      for (int u = 0; u < report.n; ++u)
        for (int v = u + 1; v < report.n; ++v) {
          if (g.has_edge(u, v)) continue;
          g.set_color(u, v, EdgeColor::Red);
          partial[idx].insert(canonical_form(g));
          g.set_color(u, v, EdgeColor::None);
        }
    });
    std::set<CanonicalForm> next;
    for (const auto& part : partial) next.insert(part.begin(), part.end());
    current = std::move(next);
  }

  std::vector<CanonicalForm> keys(current.begin(), current.end());
  std::vector<long long> non_cycle(keys.size());
  parallel_for(keys.size(), [&](size_t idx) {
    ColoredGraph g = ColoredGraph::decode(keys[idx]);
    non_cycle[idx] =
        report.budget -
        static_cast<long long>(cycle_edge_set(g, report.cycle_length).size());
  });
  long long max_non_cycle = -1;
  for (long long value : non_cycle) max_non_cycle = std::max(max_non_cycle, value);
  return max_non_cycle == report.budget - report.min_cycle_edges;
}

ColoredGraph truncate_to_budget(const ColoredGraph& g, int cycle_length) {
  const long long budget = edge_budget(g.vertex_count());
  long long excess = g.edge_count() - budget;
  if (excess < 0)
    throw std::invalid_argument("graph has fewer edges than the budget");
  ColoredGraph out = g;
  while (excess > 0) {
    std::set<VertexPair> cycle_edges = cycle_edge_set(out, cycle_length);
    if (cycle_edges.empty())
      throw std::runtime_error("cannot truncate: no cycle edges left");
    auto [u, v] = *cycle_edges.begin();
    out.set_color(u, v, EdgeColor::None);
    --excess;
  }
  return out;
}

}  // namespace flagcert
