#include "flagcert/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "flagcert/enumerate.hpp"

namespace flagcert {

namespace {

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

unsigned long long falling_factorial(int n, int k) {
  unsigned long long r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    fn(subset);
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

template <typename Fn>
void for_each_ordered_tuple(int n, int k, Fn&& fn) {
  std::vector<int> tuple;
  std::vector<bool> used(n, false);
  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(tuple.size()) == k) {
      fn(tuple);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      tuple.push_back(v);
      self(self);
      tuple.pop_back();
      used[v] = false;
    }
  };
  recurse(recurse);
}

std::vector<int> complement_of(const std::vector<int>& subset, int n) {
  std::vector<int> out;
  out.reserve(n - subset.size());
  size_t pos = 0;
  for (int v = 0; v < n; ++v) {
    if (pos < subset.size() && subset[pos] == v)
      ++pos;
    else
      out.push_back(v);
  }
  return out;
}

}  // namespace

Rational density(const PatternGraph& f, const ColoredGraph& g) {
  const int k = f.vertex_count(), n = g.vertex_count();
  if (k > n) return Rational(0);
  std::set<CanonicalForm> accepted;
  for (const ColoredGraph& recolored : f.recolorings())
    accepted.insert(canonical_form(recolored));

  long hits = 0;
  for_each_subset(n, k, [&](const std::vector<int>& subset) {
    if (accepted.count(canonical_form(g.induced(subset)))) ++hits;
  });
  return make_rational(hits, static_cast<long>(binomial(n, k)));
}

Rational density(const ColoredGraph& f, const ColoredGraph& g) {
  return density(PatternGraph(f), g);
}

Rational pair_density(const ColoredGraph& f1, const ColoredGraph& f2,
                      const ColoredGraph& h) {
  const int v1 = f1.vertex_count(), v2 = f2.vertex_count();
  if (v1 + v2 != h.vertex_count())
    throw std::invalid_argument("pair_density size mismatch");
  CanonicalForm key1 = canonical_form(f1);
  CanonicalForm key2 = canonical_form(f2);
  long hits = 0;
  for_each_subset(h.vertex_count(), v1, [&](const std::vector<int>& subset) {
    if (canonical_form(h.induced(subset)) != key1) return;
    if (canonical_form(h.induced(complement_of(subset, h.vertex_count()))) ==
        key2)
      ++hits;
  });
  return make_rational(hits,
                       static_cast<long>(binomial(h.vertex_count(), v1)));
}

namespace {

// rooted induced subgraph: the roots of `big` first, then `extra`; returns
// its rooted canonical key
std::string rooted_subgraph_key(const ColoredGraph& g,
                                const std::vector<int>& root,
                                const std::vector<int>& extra) {
  std::vector<int> vertices(root);
  vertices.insert(vertices.end(), extra.begin(), extra.end());
  ColoredGraph sub = g.induced(vertices);
  std::vector<int> sub_root(root.size());
  for (size_t i = 0; i < root.size(); ++i) sub_root[i] = static_cast<int>(i);
  return flag_key(sub, sub_root);
}

std::vector<int> non_root_vertices(const Flag& f) {
  std::vector<bool> is_root(f.size(), false);
  for (int r : f.root) is_root[r] = true;
  std::vector<int> out;
  for (int v = 0; v < f.size(); ++v)
    if (!is_root[v]) out.push_back(v);
  return out;
}

}  // namespace

Rational flag_density(const Flag& f, const Flag& big) {
  if (f.root.size() != big.root.size() ||
      f.root_graph().encode() != big.root_graph().encode())
    throw std::invalid_argument("flag_density root mismatch");
  const int k = static_cast<int>(f.root.size());
  const int pick = f.size() - k;
  if (f.size() > big.size()) return Rational(0);

  std::vector<int> pool = non_root_vertices(big);
  std::string want = f.key();
  long hits = 0;
  for_each_subset(static_cast<int>(pool.size()), pick,
                  [&](const std::vector<int>& idx) {
                    std::vector<int> extra(idx.size());
                    for (size_t i = 0; i < idx.size(); ++i)
                      extra[i] = pool[idx[i]];
                    if (rooted_subgraph_key(big.graph, big.root, extra) == want)
                      ++hits;
                  });
  return make_rational(
      hits, static_cast<long>(binomial(static_cast<int>(pool.size()), pick)));
}

FlagCombo flag_product(const Flag& f1, const Flag& f2,
                       const ForbiddenFamily* family) {
  if (f1.root.size() != f2.root.size() ||
      f1.root_graph().encode() != f2.root_graph().encode())
    throw std::invalid_argument("flag_product type mismatch");
  const int k = static_cast<int>(f1.root.size());
  const int level = f1.size() + f2.size() - k;
  TypeSigma sigma{"t" + f1.root_graph().encode(), f1.root_graph()};
  const FlagBasis& basis = FlagBasis::get(sigma, level, family);

  const std::string want1 = f1.key(), want2 = f2.key();
  const int pick = f1.size() - k;

  FlagCombo out;
  out.level = level;
  for (const Flag& h : basis.flags()) {
    std::vector<int> pool = non_root_vertices(h);
    long hits = 0;
    for_each_subset(static_cast<int>(pool.size()), pick,
                    [&](const std::vector<int>& idx) {
                      std::vector<int> side1(idx.size());
                      for (size_t i = 0; i < idx.size(); ++i)
                        side1[i] = pool[idx[i]];
                      if (rooted_subgraph_key(h.graph, h.root, side1) != want1)
                        return;
                      std::vector<int> side2;
                      std::set<int> taken(side1.begin(), side1.end());
                      for (int v : pool)
                        if (!taken.count(v)) side2.push_back(v);
                      if (rooted_subgraph_key(h.graph, h.root, side2) == want2)
                        ++hits;
                    });
    if (hits == 0) continue;
    out.terms[h.key()] = make_rational(
        hits,
        static_cast<long>(binomial(static_cast<int>(pool.size()), pick)));
  }
  return out;
}

GraphCombo graph_product(const ColoredGraph& g1, const ColoredGraph& g2,
                         const ForbiddenFamily* family) {
  const int level = g1.vertex_count() + g2.vertex_count();
  CanonicalForm key1 = canonical_form(g1), key2 = canonical_form(g2);
  GraphCombo out;
  out.level = level;
  for (const ColoredGraph& h : enumerate_colored_graphs(level, family)) {
    long hits = 0;
    for_each_subset(level, g1.vertex_count(), [&](const std::vector<int>& s) {
      if (canonical_form(h.induced(s)) != key1) return;
      if (canonical_form(h.induced(complement_of(s, level))) == key2) ++hits;
    });
    if (hits)
      out.add(h.encode(),
              QSqrt2(make_rational(
                  hits, static_cast<long>(binomial(level, g1.vertex_count())))));
  }
  return out;
}

std::pair<Rational, ColoredGraph> average_down(const Flag& f) {
  const int n = f.size();
  const int k = static_cast<int>(f.root.size());
  const std::string want = f.key();
  long hits = 0;
  for_each_ordered_tuple(n, k, [&](const std::vector<int>& theta) {
    if (flag_key(f.graph, theta) == want) ++hits;
  });
  return {make_rational(hits, static_cast<long>(falling_factorial(n, k))),
          f.graph};
}

GraphCombo average_down(const FlagCombo& combo, const TypeSigma&) {
  GraphCombo out;
  out.level = combo.level;
  for (const auto& [key, coeff] : combo.terms) {
    size_t bar = key.rfind('|');
    ColoredGraph g = ColoredGraph::decode(key.substr(0, bar));
    int k = std::stoi(key.substr(bar + 1));
    std::vector<int> root(k);
    for (int i = 0; i < k; ++i) root[i] = i;
    auto [p, graph] = average_down(Flag{g, root});
    out.add(canonical_form(graph), QSqrt2(p * coeff));
  }
  return out;
}

GraphCombo extend_level(const GraphCombo& combo, int target_level,
                        const ForbiddenFamily* family) {
  if (target_level < combo.level)
    throw std::invalid_argument("extend_level cannot go down");
  if (target_level > kEnumerateMaxVertices)
    throw std::out_of_range("extend_level capped at level 7");
  GraphCombo current = combo;
  while (current.level < target_level) {
    GraphCombo next;
    next.level = current.level + 1;
    for (const ColoredGraph& child :
         enumerate_colored_graphs(current.level + 1, family)) {
      QSqrt2 total;
      for (int v = 0; v < child.vertex_count(); ++v) {
        CanonicalForm parent = canonical_form(child.with_vertex_deleted(v));
        auto it = current.terms.find(parent);
        if (it != current.terms.end()) total += it->second;
      }
      if (!total.is_zero())
        next.add(child.encode(),
                 total * QSqrt2(make_rational(1, child.vertex_count())));
    }
    current = std::move(next);
  }
  return current;
}

namespace {

QuadraticExpansion build_quadratic_expansion(const TypeSigma& sigma,
                                             const FlagBasis& basis,
                                             const ForbiddenFamily* family) {
  const int k = sigma.size();
  const int s = basis.flag_size();
  const int level = 2 * s - k;

  QuadraticExpansion expansion;
  expansion.level = level;
  const unsigned long long maps = falling_factorial(level, k);
  const unsigned long long splits = binomial(level - k, s - k);
  expansion.norm =
      make_rational(1, static_cast<long>(maps) * static_cast<long>(splits));

  const std::vector<ColoredGraph>& graphs =
      enumerate_colored_graphs(level, family);
  expansion.counts.resize(graphs.size());
  for (size_t hi = 0; hi < graphs.size(); ++hi) {
    const ColoredGraph& h = graphs[hi];
    std::map<std::pair<int, int>, long>& counts = expansion.counts[hi];
    for_each_ordered_tuple(level, k, [&](const std::vector<int>& theta) {
      if (!sigma.embeds(theta, h)) return;
      std::vector<int> sorted_theta(theta);
      std::sort(sorted_theta.begin(), sorted_theta.end());
      std::vector<int> pool = complement_of(sorted_theta, level);
      for_each_subset(static_cast<int>(pool.size()), s - k,
                      [&](const std::vector<int>& idx) {
                        std::vector<int> side1(idx.size());
                        for (size_t i = 0; i < idx.size(); ++i)
                          side1[i] = pool[idx[i]];
                        int i1 = basis.index_of(
                            rooted_subgraph_key(h, theta, side1));
                        std::vector<int> side2;
                        std::set<int> taken(side1.begin(), side1.end());
                        for (int v : pool)
                          if (!taken.count(v)) side2.push_back(v);
                        int i2 = basis.index_of(
                            rooted_subgraph_key(h, theta, side2));
                        if (i1 < 0 || i2 < 0)
                          throw std::logic_error(
                              "family-free subflag missing from basis");
                        ++counts[{i1, i2}];
                      });
    });
  }
  return expansion;
}

}  // namespace

const QuadraticExpansion& quadratic_expansion(const TypeSigma& sigma,
                                              const FlagBasis& basis,
                                              const ForbiddenFamily* family) {
  static std::mutex mutex;
  static std::map<std::string, QuadraticExpansion> cache;
  std::string key = sigma.name + "/" + sigma.graph.encode() + "/" +
                    std::to_string(basis.flag_size()) + "/" +
                    (family ? family->name : "NONE");
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build_quadratic_expansion(sigma, basis, family))
             .first;
  return it->second;
}

GraphCombo quadratic_form_expand(const TypeSigma& sigma,
                                 const FlagBasis& basis, const SymMatrixQ& q,
                                 const ForbiddenFamily* family) {
  if (q.dim() != basis.count())
    throw std::invalid_argument("matrix dimension does not match basis size");
  const QuadraticExpansion& expansion =
      quadratic_expansion(sigma, basis, family);
  const std::vector<ColoredGraph>& graphs =
      enumerate_colored_graphs(expansion.level, family);

  GraphCombo out;
  out.level = expansion.level;
  for (size_t hi = 0; hi < graphs.size(); ++hi) {
    QSqrt2 coeff;
    for (const auto& [pair, count] : expansion.counts[hi]) {
      const QSqrt2& entry = q.at(pair.first, pair.second);
      if (entry.is_zero()) continue;
      coeff += entry * QSqrt2(Rational(count) * expansion.norm);
    }
    if (!coeff.is_zero()) out.add(graphs[hi].encode(), coeff);
  }
  return out;
}

QSqrt2 evaluate_combo(const GraphCombo& combo, const ColoredGraph& g) {
  if (combo.terms.empty()) return QSqrt2();
  const int level = combo.level;
  if (level > g.vertex_count()) return QSqrt2();
  std::map<CanonicalForm, long> histogram;
  for_each_subset(g.vertex_count(), level, [&](const std::vector<int>& s) {
    ++histogram[canonical_form(g.induced(s))];
  });
  QSqrt2 total;
  for (const auto& [key, coeff] : combo.terms) {
    auto it = histogram.find(key);
    if (it == histogram.end()) continue;
    total += coeff * QSqrt2(make_rational(
                         it->second,
                         static_cast<long>(binomial(g.vertex_count(), level))));
  }
  return total;
}

}  // namespace flagcert
