#ifndef FLAGCERT_ALGEBRA_HPP
#define FLAGCERT_ALGEBRA_HPP

#include <map>

#include "flagcert/combo.hpp"
#include "flagcert/flag.hpp"
#include "flagcert/matrix.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

// p(f, g): probability that a uniform v(f)-subset of V(g) induces a graph
// matching f, black edges standing for red or blue. Zero when f is larger
// than g.
Rational density(const PatternGraph& f, const ColoredGraph& g);
Rational density(const ColoredGraph& f, const ColoredGraph& g);

// p(f1, f2; h): probability that a uniform v(f1)-subset and its complement
// induce f1 and f2. Requires v(f1) + v(f2) = v(h).
Rational pair_density(const ColoredGraph& f1, const ColoredGraph& f2,
                      const ColoredGraph& h);

// p(f, big) for sigma-flags with a common type.
Rational flag_density(const Flag& f, const Flag& big);

// Linear combination over sigma-flags, keyed by rooted canonical key.
struct FlagCombo {
  int level = 0;
  std::map<std::string, Rational> terms;
};

// f1 x f2 expanded over the family-free flag basis at level
// v(f1) + v(f2) - v(sigma). Graphs outside the family are dropped.
FlagCombo flag_product(const Flag& f1, const Flag& f2,
                       const ForbiddenFamily* family);

// Unrooted product g1 x g2 at level v(g1) + v(g2).
GraphCombo graph_product(const ColoredGraph& g1, const ColoredGraph& g2,
                         const ForbiddenFamily* family);

// The downward operator on a single flag: (p, H) with
// [[f]]_sigma = p * H, p the probability that a random injective labeling
// is a root embedding yielding f.
std::pair<Rational, ColoredGraph> average_down(const Flag& f);

// Applies average_down to every term.
GraphCombo average_down(const FlagCombo& combo, const TypeSigma& sigma);

// Rewrites every term through the chain relation until the target level.
GraphCombo extend_level(const GraphCombo& combo, int target_level,
                        const ForbiddenFamily* family);

// Combinatorial core of the quadratic-form expansion, independent of the
// matrix: for the graph at index h of the target level, counts[h] maps a
// basis pair (i, j) to the number of (root map, split) incidences realizing
// it. Coefficients follow as sum_ij Q_ij * counts[h][{i,j}] * norm.
struct QuadraticExpansion {
  int level = 0;
  Rational norm;
  std::vector<std::map<std::pair<int, int>, long>> counts;
};

// Cached per (sigma, basis size, family); shared by the verifier and the
// SDP exporter.
const QuadraticExpansion& quadratic_expansion(const TypeSigma& sigma,
                                              const FlagBasis& basis,
                                              const ForbiddenFamily* family);

// [[v^T Q v]]_sigma over the given basis, expanded at level
// 2*size - v(sigma): for each family-free H there, the coefficient is
// sum_ij Q_ij averaged over all injective label maps theta
// (non-embeddings contribute zero) of p(b_i, b_j; H rooted at theta).
GraphCombo quadratic_form_expand(const TypeSigma& sigma,
                                 const FlagBasis& basis, const SymMatrixQ& q,
                                 const ForbiddenFamily* family);

// sum over terms of coeff * p(term, g)
QSqrt2 evaluate_combo(const GraphCombo& combo, const ColoredGraph& g);

}  // namespace flagcert

#endif
