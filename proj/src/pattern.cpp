#include "flagcert/pattern.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace flagcert {

namespace {

bool edge_matches(EdgeColor pattern, EdgeColor host, bool induced) {
  switch (pattern) {
    case EdgeColor::None:
      return induced ? host == EdgeColor::None : true;
    case EdgeColor::Red:
      return host == EdgeColor::Red;
    case EdgeColor::Blue:
      return host == EdgeColor::Blue;
    case EdgeColor::Black:
      return host == EdgeColor::Red || host == EdgeColor::Blue;
  }
  return false;
}

// pattern vertices ordered so each one touches as many already-placed
// vertices as possible
std::vector<int> matching_order(const PatternGraph& p) {
  const int k = p.vertex_count();
  std::vector<int> order;
  std::vector<bool> placed(k, false);
  for (int step = 0; step < k; ++step) {
    int best = -1, best_links = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : order)
        if (p.color(u, v) != EdgeColor::None) ++links;
      if (links > best_links) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed[best] = true;
  }
  return order;
}

struct Matcher {
  const ColoredGraph& g;
  const PatternGraph& p;
  bool induced;
  int required;
  std::vector<int> order;
  std::vector<int> image;  // pattern vertex -> g vertex
  std::vector<bool> used;

  bool extend(size_t depth) {
    if (depth == order.size()) {
      return required < 0 || used[required];
    }
    int pv = order[depth];
    for (int gv = 0; gv < g.vertex_count(); ++gv) {
      if (used[gv]) continue;
      bool ok = true;
      for (size_t d = 0; d < depth; ++d) {
        int prev = order[d];
        if (!edge_matches(p.color(prev, pv), g.color(image[prev], gv),
                          induced)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[pv] = gv;
      used[gv] = true;
      if (extend(depth + 1)) return true;
      used[gv] = false;
    }
    return false;
  }
};

}  // namespace

bool contains_pattern(const ColoredGraph& g, const PatternGraph& p,
                      bool induced, int required_vertex) {
  if (p.vertex_count() > g.vertex_count()) return false;
  if (p.vertex_count() == 0) return required_vertex < 0;
  Matcher m{g, p, induced, required_vertex, matching_order(p),
            std::vector<int>(p.vertex_count(), -1),
            std::vector<bool>(g.vertex_count(), false)};
  return m.extend(0);
}

// ---------------------------------------------------------------------------
// forbidden family data

std::string builtin_pattern_data_text() {
  // same grammar as data/forbidden_patterns.txt
  return
      "# forbidden pattern table, one pattern per line: <family> <name> <encoding>\n"
      "# digits: 0 none, 1 red, 2 blue, 3 black (wildcard over red/blue)\n"
      "FC5 B3 3:233\n"
      "FC5 B3+ 4:330302\n"
      "FC5 B5 5:2003300303\n"
      "FC7 B3 3:233\n"
      "FC7 B3+ 4:330302\n"
      "FC7 B3* 5:3300300302\n"
      "FC7 B5 5:2003300303\n"
      "FC7 B5+ 6:300323000300300\n";
}

std::string pattern_data_text() {
  if (const char* path = std::getenv("FLAGCERT_PATTERNS")) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string("cannot read FLAGCERT_PATTERNS file: ") + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return builtin_pattern_data_text();
}

namespace {

std::map<std::string, ForbiddenFamily> parse_families(const std::string& text) {
  std::map<std::string, ForbiddenFamily> families;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string family, name, encoding;
    if (!(ls >> family >> name >> encoding))
      throw std::runtime_error("bad pattern table line " +
                               std::to_string(lineno) + ": " + line);
    ForbiddenFamily& f = families[family];
    f.name = family;
    f.patterns.push_back(PatternGraph::decode(encoding));
  }
  return families;
}

const std::map<std::string, ForbiddenFamily>& families() {
  static std::map<std::string, ForbiddenFamily> table =
      parse_families(pattern_data_text());
  return table;
}

}  // namespace

const ForbiddenFamily& family_fc5() { return families().at("FC5"); }
const ForbiddenFamily& family_fc7() { return families().at("FC7"); }

const ForbiddenFamily* family_by_name(const std::string& name) {
  if (name == "NONE" || name.empty()) return nullptr;
  auto it = families().find(name);
  if (it == families().end())
    throw std::invalid_argument("unknown forbidden family: " + name);
  return &it->second;
}

bool is_family_free(const ColoredGraph& g, const ForbiddenFamily* family) {
  if (family == nullptr) return true;
  for (const PatternGraph& p : family->patterns)
    if (contains_pattern(g, p, /*induced=*/false)) return false;
  return true;
}

bool is_family_free_at(const ColoredGraph& g, const ForbiddenFamily* family,
                       int new_vertex) {
  if (family == nullptr) return true;
  for (const PatternGraph& p : family->patterns)
    if (contains_pattern(g, p, /*induced=*/false, new_vertex)) return false;
  return true;
}

}  // namespace flagcert
