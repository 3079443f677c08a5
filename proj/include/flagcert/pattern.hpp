#ifndef FLAGCERT_PATTERN_HPP
#define FLAGCERT_PATTERN_HPP

#include <string>
#include <vector>

#include "flagcert/colored_graph.hpp"

namespace flagcert {

// Injective vertex map realizing p inside g. Black pattern edges match red
// or blue. Induced mode also forces pattern non-edges onto non-edges;
// non-induced mode only requires the pattern edges to be matched.
// If required_vertex >= 0 the image must contain that vertex of g.
bool contains_pattern(const ColoredGraph& g, const PatternGraph& p,
                      bool induced, int required_vertex = -1);

struct ForbiddenFamily {
  std::string name;
  std::vector<PatternGraph> patterns;
};

// The two families used throughout; pattern shapes live in
// data/forbidden_patterns.txt (see pattern_data_text()) so they can be
// amended without touching code.
const ForbiddenFamily& family_fc5();
const ForbiddenFamily& family_fc7();
const ForbiddenFamily* family_by_name(const std::string& name);  // "NONE" -> nullptr

bool is_family_free(const ColoredGraph& g, const ForbiddenFamily* family);
// incremental variant: assumes g minus `new_vertex` is already family-free
bool is_family_free_at(const ColoredGraph& g, const ForbiddenFamily* family,
                       int new_vertex);

// contents of the pattern data table in effect (file override via
// FLAGCERT_PATTERNS, else the built-in copy)
std::string pattern_data_text();
std::string builtin_pattern_data_text();

}  // namespace flagcert

#endif
