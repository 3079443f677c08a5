#include "flagcert/flag.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "flagcert/canonical.hpp"
#include "flagcert/enumerate.hpp"

namespace flagcert {

bool TypeSigma::embeds(const std::vector<int>& theta,
                       const ColoredGraph& h) const {
  const int k = size();
  if (static_cast<int>(theta.size()) != k) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (h.color(theta[i], theta[j]) != graph.color(i, j)) return false;
  return true;
}

namespace {
TypeSigma two_vertex_type(const std::string& name, EdgeColor c) {
  ColoredGraph g(2);
  g.set_color(0, 1, c);
  return TypeSigma{name, g};
}
}  // namespace

TypeSigma TypeSigma::lambda_type() {
  return two_vertex_type("lambda", EdgeColor::None);
}
TypeSigma TypeSigma::beta_type() {
  return two_vertex_type("beta", EdgeColor::Blue);
}
TypeSigma TypeSigma::rho_type() {
  return two_vertex_type("rho", EdgeColor::Red);
}

TypeSigma TypeSigma::by_name(const std::string& name) {
  if (name == "lambda") return lambda_type();
  if (name == "beta") return beta_type();
  if (name == "rho") return rho_type();
  throw std::invalid_argument("unknown type name: " + name);
}

std::string flag_key(const ColoredGraph& g, const std::vector<int>& root) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(root.size());
  std::vector<int> order(root);
  std::vector<int> rest;
  std::vector<bool> is_root(n, false);
  for (int r : root) is_root[r] = true;
  for (int v = 0; v < n; ++v)
    if (!is_root[v]) rest.push_back(v);

  // minimize the encoding over all placements of the non-root vertices;
  // roots stay pinned to the first positions in label order
  std::string best;
  do {
    order.resize(k);
    order.insert(order.end(), rest.begin(), rest.end());
    // order[pos] = original vertex; build digits
    std::string s;
    s.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        s.push_back(static_cast<char>(
            '0' + static_cast<uint8_t>(g.color(order[i], order[j]))));
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::to_string(n) + ":" + best + "|" + std::to_string(k);
}

std::string Flag::key() const { return flag_key(graph, root); }

Flag Flag::canonical() const {
  std::string k = key();
  size_t bar = k.rfind('|');
  ColoredGraph g = ColoredGraph::decode(k.substr(0, bar));
  std::vector<int> r(root.size());
  for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(i);
  return Flag{g, r};
}

namespace {

// basis order: canonical unrooted key, then the least root tuple over
// automorphisms of the canonical representative
std::pair<std::string, std::vector<int>> flag_sort_key(const Flag& f) {
  CanonResult canon = canonical_form_full(f.graph);
  std::vector<int> position_of(f.graph.vertex_count());
  for (size_t pos = 0; pos < canon.labeling.size(); ++pos)
    position_of[canon.labeling[pos]] = static_cast<int>(pos);

  std::vector<int> tuple(f.root.size());
  for (size_t i = 0; i < f.root.size(); ++i)
    tuple[i] = position_of[f.root[i]];

  ColoredGraph rep = ColoredGraph::decode(canon.key);
  std::vector<int> best = tuple;
  for (const auto& aut : automorphisms(rep)) {
    std::vector<int> candidate(tuple.size());
    for (size_t i = 0; i < tuple.size(); ++i) candidate[i] = aut[tuple[i]];
    if (candidate < best) best = candidate;
  }
  return {canon.key, best};
}

struct BasisCache {
  std::mutex mutex;
  std::map<std::string, FlagBasis> bases;
};

BasisCache& basis_cache() {
  static BasisCache cache;
  return cache;
}

}  // namespace

FlagBasis FlagBasis::build(const TypeSigma& sigma, int size,
                           const ForbiddenFamily* family) {
  if (size < sigma.size())
    throw std::invalid_argument("flag size below type size");
  FlagBasis basis;
  basis.sigma_ = sigma;
  basis.size_ = size;
  basis.family_ = family;

  const int k = sigma.size();
  std::map<std::string, Flag> classes;
  for (const ColoredGraph& h : enumerate_colored_graphs(size, family)) {
    std::vector<int> theta;
    std::vector<bool> used(size, false);
    auto recurse = [&](auto&& self) -> void {
      if (static_cast<int>(theta.size()) == k) {
        if (sigma.embeds(theta, h)) {
          Flag f{h, theta};
          classes.emplace(f.key(), f);
        }
        return;
      }
      for (int v = 0; v < size; ++v) {
        if (used[v]) continue;
        used[v] = true;
        theta.push_back(v);
        self(self);
        theta.pop_back();
        used[v] = false;
      }
    };
    recurse(recurse);
  }

  std::vector<std::pair<std::pair<std::string, std::vector<int>>, Flag>> sorted;
  sorted.reserve(classes.size());
  for (auto& [key, flag] : classes)
    sorted.emplace_back(flag_sort_key(flag), flag.canonical());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (auto& [sort_key, flag] : sorted) {
    basis.index_[flag.key()] = static_cast<int>(basis.flags_.size());
    basis.flags_.push_back(flag);
  }
  return basis;
}

const FlagBasis& FlagBasis::get(const TypeSigma& sigma, int size,
                                const ForbiddenFamily* family) {
  std::string cache_key = sigma.name + "/" + sigma.graph.encode() + "/" +
                          std::to_string(size) + "/" +
                          (family ? family->name : "NONE");
  BasisCache& cache = basis_cache();
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto it = cache.bases.find(cache_key);
  if (it == cache.bases.end())
    it = cache.bases.emplace(cache_key, build(sigma, size, family)).first;
  return it->second;
}

int FlagBasis::index_of(const std::string& flag_key) const {
  auto it = index_.find(flag_key);
  return it == index_.end() ? -1 : it->second;
}

std::string FlagBasis::dump() const {
  std::ostringstream out;
  for (const Flag& f : flags_) {
    out << f.graph.encode() << "|";
    for (size_t i = 0; i < f.root.size(); ++i) {
      if (i) out << ' ';
      out << f.root[i];
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace flagcert
