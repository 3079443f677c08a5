#ifndef FLAGCERT_ENUMERATE_HPP
#define FLAGCERT_ENUMERATE_HPP

#include <vector>

#include "flagcert/canonical.hpp"
#include "flagcert/colored_graph.hpp"
#include "flagcert/pattern.hpp"

namespace flagcert {

constexpr int kEnumerateMaxVertices = 7;

// One canonical representative per isomorphism class of family-free
// red/blue-colored graphs on n vertices, in canonical-key order.
// Results are cached per (family, n), in memory and optionally on disk
// (FLAGCERT_CACHE_DIR). Throws on n > 7.
const std::vector<ColoredGraph>& enumerate_colored_graphs(
    int n, const ForbiddenFamily* family);

// Index of a canonical key within the enumerated level; -1 if absent.
int level_index_of(const CanonicalForm& key, int n,
                   const ForbiddenFamily* family);

}  // namespace flagcert

#endif
