#ifndef FLAGCERT_COLORED_GRAPH_HPP
#define FLAGCERT_COLORED_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace flagcert {

enum class EdgeColor : uint8_t { None = 0, Red = 1, Blue = 2, Black = 3 };

// Red/blue-colored graph on up to 64 vertices (adjacency rows fit a machine
// word). The color map is total over unordered pairs; Black is only legal in
// patterns, see PatternGraph.
class ColoredGraph {
 public:
  static constexpr int kMaxVertices = 64;

  ColoredGraph() : n_(0) {}
  explicit ColoredGraph(int n);

  int vertex_count() const { return n_; }
  int pair_count() const { return n_ * (n_ - 1) / 2; }

  EdgeColor color(int u, int v) const {
    return static_cast<EdgeColor>(colors_[pair_index(u, v)]);
  }
  void set_color(int u, int v, EdgeColor c) {
    colors_[pair_index(u, v)] = static_cast<uint8_t>(c);
  }
  bool has_edge(int u, int v) const { return color(u, v) != EdgeColor::None; }

  int edge_count() const;
  int count_color(EdgeColor c) const;

  // bitmask of neighbours of v joined by any edge / by the given color
  uint64_t adjacency(int v) const;
  uint64_t adjacency(int v, EdgeColor c) const;

  // text form "n:<digits>", digits in row-major upper-triangular pair order
  std::string encode() const;
  static ColoredGraph decode(const std::string& text);

  ColoredGraph relabeled(const std::vector<int>& perm) const;
  ColoredGraph induced(const std::vector<int>& vertices) const;
  ColoredGraph with_vertex_deleted(int v) const;

  // appends an isolated vertex
  ColoredGraph extended_by_vertex() const;

  bool operator==(const ColoredGraph& o) const {
    return n_ == o.n_ && colors_ == o.colors_;
  }
  bool operator!=(const ColoredGraph& o) const { return !(*this == o); }

  int pair_index(int u, int v) const;

  // plain graph helpers: every present edge red
  static ColoredGraph plain_from_edges(int n,
                                       const std::vector<std::pair<int, int>>& edges);

 protected:
  int n_;
  std::vector<uint8_t> colors_;  // one entry per unordered pair
};

// Same storage but Black is allowed; used for forbidden patterns and
// density queries with wildcard edges.
class PatternGraph : public ColoredGraph {
 public:
  PatternGraph() = default;
  explicit PatternGraph(int n) : ColoredGraph(n) {}
  explicit PatternGraph(const ColoredGraph& g) : ColoredGraph(g) {}

  static PatternGraph decode(const std::string& text);

  int black_count() const { return count_color(EdgeColor::Black); }

  // all red/blue recolorings of the black edges
  std::vector<ColoredGraph> recolorings() const;
};

}  // namespace flagcert

#endif
