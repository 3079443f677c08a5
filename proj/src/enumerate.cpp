#include "flagcert/enumerate.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "flagcert/cache.hpp"

namespace flagcert {

namespace {

std::string family_key(const ForbiddenFamily* family) {
  return family == nullptr ? "NONE" : family->name;
}

// Extend each (n-1)-vertex representative by one vertex with every possible
// color row; dedupe by canonical key. Vertex deletion preserves being
// family-free, so every class is reached from some parent.
std::vector<ColoredGraph> enumerate_level(int n,
                                          const ForbiddenFamily* family) {
  if (n == 0) return {ColoredGraph(0)};
  const std::vector<ColoredGraph>& parents =
      enumerate_colored_graphs(n - 1, family);

  std::map<CanonicalForm, ColoredGraph> classes;
  size_t rows = 1;
  for (int i = 0; i < n - 1; ++i) rows *= 3;

  for (const ColoredGraph& parent : parents) {
    ColoredGraph g = parent.extended_by_vertex();
    const int v = n - 1;
    for (size_t row = 0; row < rows; ++row) {
      size_t r = row;
      for (int u = 0; u < v; ++u) {
        g.set_color(u, v, static_cast<EdgeColor>(r % 3));
        r /= 3;
      }
      if (!is_family_free_at(g, family, v)) continue;
      CanonicalForm key = canonical_form(g);
      classes.emplace(std::move(key), g);
    }
  }

  std::vector<ColoredGraph> out;
  out.reserve(classes.size());
  for (auto& [key, graph] : classes)
    out.push_back(ColoredGraph::decode(key));
  return out;
}

struct LevelCache {
  std::mutex mutex;
  std::map<std::pair<std::string, int>, std::vector<ColoredGraph>> levels;
  std::map<std::pair<std::string, int>, std::map<std::string, int>> indexes;
};

LevelCache& level_cache() {
  static LevelCache cache;
  return cache;
}

std::string cache_stamp(const ForbiddenFamily*) {
  return hex64(fnv1a("graphs-v2|" + pattern_data_text()));
}

}  // namespace

const std::vector<ColoredGraph>& enumerate_colored_graphs(
    int n, const ForbiddenFamily* family) {
  if (n < 0 || n > kEnumerateMaxVertices)
    throw std::out_of_range("enumeration supports 0 <= n <= 7, got " +
                            std::to_string(n));
  LevelCache& cache = level_cache();
  std::pair<std::string, int> key{family_key(family), n};
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.levels.find(key);
    if (it != cache.levels.end()) return it->second;
  }

  // disk cache pays off from level 6 up
  std::string file_name = "graphs_" + key.first + "_" + std::to_string(n) + ".txt";
  std::vector<ColoredGraph> graphs;
  bool loaded = false;
  if (n >= 6) {
    if (auto lines = cache_load(file_name, cache_stamp(family))) {
      graphs.reserve(lines->size());
      for (const std::string& line : *lines)
        if (!line.empty()) graphs.push_back(ColoredGraph::decode(line));
      loaded = true;
    }
  }
  if (!loaded) {
    graphs = enumerate_level(n, family);
    if (n >= 6) {
      std::vector<std::string> lines;
      lines.reserve(graphs.size());
      for (const ColoredGraph& g : graphs) lines.push_back(g.encode());
      cache_store(file_name, cache_stamp(family), lines);
    }
  }

  std::lock_guard<std::mutex> lock(cache.mutex);
  auto [it, inserted] = cache.levels.emplace(key, std::move(graphs));
  return it->second;
}

int level_index_of(const CanonicalForm& key, int n,
                   const ForbiddenFamily* family) {
  const std::vector<ColoredGraph>& level = enumerate_colored_graphs(n, family);
  LevelCache& cache = level_cache();
  std::pair<std::string, int> ck{family_key(family), n};
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto& index = cache.indexes[ck];
  if (index.empty()) {
    for (size_t i = 0; i < level.size(); ++i)
      index[level[i].encode()] = static_cast<int>(i);
  }
  auto it = index.find(key);
  return it == index.end() ? -1 : it->second;
}

}  // namespace flagcert
