#ifndef FLAGCERT_CYCLES_HPP
#define FLAGCERT_CYCLES_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "flagcert/colored_graph.hpp"

namespace flagcert {

using VertexPair = std::pair<int, int>;  // always first < second

// Edges of g (colors ignored) lying on at least one simple cycle of length
// exactly L, not necessarily induced. Per-edge depth-first path search with
// distance pruning; 3 <= L <= n.
std::set<VertexPair> cycle_edge_set(const ColoredGraph& g, int length);

// A simple L-cycle through the given edge, as a vertex sequence, when one
// exists.
std::optional<std::vector<int>> cycle_witness(const ColoredGraph& g,
                                              int length, int u, int v);

// No blue edge may lie on a C_{2k+1}.
bool coloring_is_valid(const ColoredGraph& g, int k);

}  // namespace flagcert

#endif
