#ifndef FLAGCERT_CANONICAL_HPP
#define FLAGCERT_CANONICAL_HPP

#include <string>
#include <vector>

#include "flagcert/colored_graph.hpp"

namespace flagcert {

using CanonicalForm = std::string;  // the encoding of the canonical labeling

struct CanonResult {
  CanonicalForm key;
  // labeling[p] = original vertex placed at canonical position p
  std::vector<int> labeling;
};

// Two graphs get equal keys iff they are color-preserving isomorphic.
// Iterated color refinement plus backtracking over individualizations;
// discovered automorphisms prune equivalent branches.
CanonResult canonical_form_full(const ColoredGraph& g);
CanonicalForm canonical_form(const ColoredGraph& g);

ColoredGraph canonical_representative(const ColoredGraph& g);

// Full automorphism group by brute force; meant for small graphs
// (vertex count <= 8).
std::vector<std::vector<int>> automorphisms(const ColoredGraph& g);

}  // namespace flagcert

#endif
