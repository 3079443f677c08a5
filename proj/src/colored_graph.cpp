#include "flagcert/colored_graph.hpp"

#include <stdexcept>

namespace flagcert {

ColoredGraph::ColoredGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range: " +
                                std::to_string(n));
  colors_.assign(static_cast<size_t>(n) * (n - 1) / 2, 0);
}

int ColoredGraph::pair_index(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("bad vertex pair");
  if (u > v) std::swap(u, v);
  // row-major upper triangle: row u starts after all earlier rows
  return u * n_ - u * (u + 1) / 2 + (v - u - 1);
}

int ColoredGraph::edge_count() const {
  int count = 0;
  for (uint8_t c : colors_)
    if (c != 0) ++count;
  return count;
}

int ColoredGraph::count_color(EdgeColor c) const {
  int count = 0;
  for (uint8_t x : colors_)
    if (x == static_cast<uint8_t>(c)) ++count;
  return count;
}

uint64_t ColoredGraph::adjacency(int v) const {
  uint64_t mask = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && has_edge(u, v)) mask |= uint64_t{1} << u;
  return mask;
}

uint64_t ColoredGraph::adjacency(int v, EdgeColor c) const {
  uint64_t mask = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && color(u, v) == c) mask |= uint64_t{1} << u;
  return mask;
}

std::string ColoredGraph::encode() const {
  std::string out = std::to_string(n_) + ":";
  out.reserve(out.size() + colors_.size());
  for (uint8_t c : colors_) out.push_back(static_cast<char>('0' + c));
  return out;
}

namespace {
std::pair<int, std::string> split_encoding(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("graph encoding lacks ':': " + text);
  int n;
  try {
    size_t used = 0;
    n = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("bad vertex count in encoding: " + text);
  }
  std::string digits = text.substr(colon + 1);
  if (static_cast<int>(digits.size()) != n * (n - 1) / 2)
    throw std::invalid_argument("encoding has wrong digit count: " + text);
  return {n, digits};
}
}  // namespace

ColoredGraph ColoredGraph::decode(const std::string& text) {
  auto [n, digits] = split_encoding(text);
  ColoredGraph g(n);
  for (size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (c < '0' || c > '2')
      throw std::invalid_argument("bad color digit in graph encoding: " + text);
    g.colors_[i] = static_cast<uint8_t>(c - '0');
  }
  return g;
}

PatternGraph PatternGraph::decode(const std::string& text) {
  auto [n, digits] = split_encoding(text);
  PatternGraph g(n);
  for (size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (c < '0' || c > '3')
      throw std::invalid_argument("bad color digit in pattern encoding: " +
                                  text);
    g.colors_[i] = static_cast<uint8_t>(c - '0');
  }
  return g;
}

ColoredGraph ColoredGraph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permutation size mismatch");
  ColoredGraph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      g.set_color(perm[u], perm[v], color(u, v));
  return g;
}

ColoredGraph ColoredGraph::induced(const std::vector<int>& vertices) const {
  ColoredGraph g(static_cast<int>(vertices.size()));
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      g.set_color(static_cast<int>(i), static_cast<int>(j),
                  color(vertices[i], vertices[j]));
  return g;
}

ColoredGraph ColoredGraph::with_vertex_deleted(int v) const {
  std::vector<int> keep;
  keep.reserve(n_ - 1);
  for (int u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

ColoredGraph ColoredGraph::extended_by_vertex() const {
  ColoredGraph g(n_ + 1);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) g.set_color(u, v, color(u, v));
  return g;
}

ColoredGraph ColoredGraph::plain_from_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
  ColoredGraph g(n);
  for (auto [u, v] : edges) g.set_color(u, v, EdgeColor::Red);
  return g;
}

std::vector<ColoredGraph> PatternGraph::recolorings() const {
  std::vector<std::pair<int, int>> black_pairs;
  ColoredGraph base(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) {
      EdgeColor c = color(u, v);
      if (c == EdgeColor::Black)
        black_pairs.emplace_back(u, v);
      else
        base.set_color(u, v, c);
    }

  std::vector<ColoredGraph> out;
  out.reserve(size_t{1} << black_pairs.size());
  for (uint64_t bits = 0; bits < (uint64_t{1} << black_pairs.size()); ++bits) {
    ColoredGraph g = base;
    for (size_t k = 0; k < black_pairs.size(); ++k)
      g.set_color(black_pairs[k].first, black_pairs[k].second,
                  (bits >> k) & 1 ? EdgeColor::Blue : EdgeColor::Red);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace flagcert
