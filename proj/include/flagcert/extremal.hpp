#ifndef FLAGCERT_EXTREMAL_HPP
#define FLAGCERT_EXTREMAL_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "flagcert/colored_graph.hpp"
#include "flagcert/cycles.hpp"
#include "flagcert/qsqrt2.hpp"

namespace flagcert {

// Edge budget floor(n^2/4) + 1 shared by the whole extremal toolkit.
long long edge_budget(long long n);

// Construction with a clique block on floor((2n+4)/3) vertices and a
// complete balanced bipartite block on floor((n+1)/3) vertices sharing one
// cut vertex. Plain graph, all edges red.
ColoredGraph clique_bipartite_construction(int n);

// Same graph with the bipartite block blue and the clique block red.
ColoredGraph clique_bipartite_construction_colored(int n);

struct Quadruple {
  long long a = 0, b = 0, c = 0, d = 0;
  long long sum() const { return a + b + c + d; }
  bool operator==(const Quadruple& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator<(const Quadruple& o) const {
    return std::array<long long, 4>{a, b, c, d} <
           std::array<long long, 4>{o.a, o.b, o.c, o.d};
  }
};

// Non-balanced path blowup: parts A, B, C, D with complete joins A-B, B-C,
// C-D and D a clique.
ColoredGraph path_blowup_construction(int n, const Quadruple& q);

// Closed-form block edge counts of path_blowup_construction (usable far beyond the
// graph vertex cap): total edges and the edges lying on a C5, namely
// |B||C| + |C||D| + C(|D|,2).
struct BlowupEdgeCounts {
  long long total = 0;
  long long cycle = 0;
};
BlowupEdgeCounts blowup_edge_counts(const Quadruple& q);

// Integer quadratic program: maximize a*b over nonnegative a+b+c+d = n with
// a*b + b*c + c*d + C(d,2) > n^2/4.
struct QpSolution {
  long long n = 0;
  long long optimal_ab = -1;  // -1 when infeasible
  std::vector<Quadruple> maximizers;
  // constraint value minus floor(n^2/4), for the reported maximizers
  std::vector<long long> feasibility_margin;
};
QpSolution solve_extremal_qp(long long n);

// QP-optimal quadruple, ties broken by lexicographic (a, b, c).
Quadruple default_blowup_quadruple(long long n);

// floor(n^2/4) + 1 - floor((n+4)/6) * floor((n+1)/6); asserts agreement with
// the mod-6 case table and the structural (|A|+1)|B| form.
long long f_formula(long long n);

// Extremal layout for long odd cycles: independent A and B, complete
// (A u C)-B join with |C| = 1, C joined to D, D near-clique filled to the
// exact edge budget.
ColoredGraph extremal_structure(int n);

struct ExtremalParts {
  long long a = 0, b = 0, c = 1, d = 0;
};
ExtremalParts extremal_parts(long long n);

struct SearchStats {
  long long classes_with_budget = 0;
  long long classes_total = 0;
  long long canonical_calls = 0;
};

struct ExtremalReport {
  int n = 0;
  int cycle_length = 0;
  long long budget = 0;
  long long min_cycle_edges = 0;
  std::vector<ColoredGraph> witnesses;  // all minimizers, canonical order
  SearchStats stats;
};

// Exact minimum of |cycle_edge_set(G, L)| over one representative per
// isomorphism class of n-vertex graphs with exactly the edge budget.
// Canonical-key dedupe by edge augmentation; n <= 9, L in {3,5,7,9}.
ExtremalReport brute_force_min(int n, int cycle_length);

// Independent oracle over raw edge subsets, no isomorphism reduction;
// n <= 7 only.
long long brute_force_min_raw(int n, int cycle_length);

// Second pass: max over the same search space of the number of edges not on
// any L-cycle must equal budget - min_cycle_edges.
bool duality_check(const ExtremalReport& report);

// Removes cycle edges first until the exact budget is reached; the result is
// a feasible point of the oracle search space.
ColoredGraph truncate_to_budget(const ColoredGraph& g, int cycle_length);

}  // namespace flagcert

#endif
