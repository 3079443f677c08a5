#ifndef FLAGCERT_FLAG_HPP
#define FLAGCERT_FLAG_HPP

#include <map>
#include <string>
#include <vector>

#include "flagcert/colored_graph.hpp"
#include "flagcert/pattern.hpp"

namespace flagcert {

// A type: a colored graph whose vertices 0..v-1 are all labeled, in order.
struct TypeSigma {
  std::string name;  // "lambda", "beta", "rho" or a generic tag
  ColoredGraph graph;

  int size() const { return graph.vertex_count(); }

  // does the ordered tuple theta embed the type into h?
  bool embeds(const std::vector<int>& theta, const ColoredGraph& h) const;

  static TypeSigma lambda_type();  // two labeled vertices, no edge
  static TypeSigma beta_type();    // blue edge
  static TypeSigma rho_type();     // red edge
  static TypeSigma by_name(const std::string& name);
};

// A sigma-flag: a colored graph with a distinguished ordered root tuple
// inducing a labeled copy of sigma.
struct Flag {
  ColoredGraph graph;
  std::vector<int> root;

  int size() const { return graph.vertex_count(); }
  ColoredGraph root_graph() const { return graph.induced(root); }

  // canonical key of the rooted isomorphism class: roots pinned to the
  // first positions, remaining vertices minimized
  std::string key() const;

  // representative whose vertices are already in key order
  Flag canonical() const;

  bool root_isomorphic_to(const Flag& other) const {
    return key() == other.key();
  }
};

std::string flag_key(const ColoredGraph& g, const std::vector<int>& root);

// Ordered list of all family-free flags of the given size over sigma, one
// per rooted isomorphism class. Order: (canonical key of the underlying
// unrooted graph, lexicographically least root tuple over its automorphisms),
// which certificate files rely on.
class FlagBasis {
 public:
  static const FlagBasis& get(const TypeSigma& sigma, int size,
                              const ForbiddenFamily* family);

  const TypeSigma& sigma() const { return sigma_; }
  int flag_size() const { return size_; }
  const ForbiddenFamily* family() const { return family_; }
  const std::vector<Flag>& flags() const { return flags_; }
  int count() const { return static_cast<int>(flags_.size()); }

  // index by rooted canonical key; -1 if absent
  int index_of(const std::string& flag_key) const;

  // one flag per line: "<graph encoding>|<root vertices space-separated>"
  std::string dump() const;

 private:
  TypeSigma sigma_;
  int size_ = 0;
  const ForbiddenFamily* family_ = nullptr;
  std::vector<Flag> flags_;
  std::map<std::string, int> index_;

  static FlagBasis build(const TypeSigma& sigma, int size,
                         const ForbiddenFamily* family);
};

}  // namespace flagcert

#endif
