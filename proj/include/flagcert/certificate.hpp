#ifndef FLAGCERT_CERTIFICATE_HPP
#define FLAGCERT_CERTIFICATE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "flagcert/algebra.hpp"
#include "flagcert/combo.hpp"
#include "flagcert/matrix.hpp"

namespace flagcert {

enum class Problem { C5, C7 };

Problem problem_from_string(const std::string& name);
std::string problem_to_string(Problem p);
const ForbiddenFamily* problem_family(Problem p);

struct CertificateBlock {
  std::string sigma_name;  // lambda | beta | rho
  SymMatrixQ matrix;       // factored form attached when given factored
};

// One slack product term. Its contribution to the identity is
//   coeff * extend_level((red + blue - nonedge) x g1 x g2, level),
// the base-constraint expression being the fixed first factor. The neutral
// multiplier is the zero-vertex graph "0:", so a single-graph multiplier g
// is the term (coeff, g, "0:").
struct SlackTerm {
  QSqrt2 coeff;
  ColoredGraph g1;
  ColoredGraph g2;
};

struct Certificate {
  Problem problem = Problem::C5;
  int level = 6;
  std::string basis_hash;
  std::vector<CertificateBlock> blocks;
  std::vector<SlackTerm> slack_terms;
  std::map<CanonicalForm, QSqrt2> c;
  GraphCombo target;

  bool operator==(const Certificate& o) const;
};

struct VerificationReport {
  bool identity_ok = false;
  bool psd_ok = false;
  bool side_conditions_ok = false;
  GraphCombo diff;  // expanded sum minus target
  std::vector<std::pair<std::string, std::string>> violations;

  bool all_ok() const { return identity_ok && psd_ok && side_conditions_ok; }
};

// Base constraint (red + blue - nonedge) as a level-2 combo.
GraphCombo base_constraint_combo();

// Multiplies a combo by a single graph, expanding at the summed level.
GraphCombo multiply_combo_by_graph(const GraphCombo& combo,
                                   const ColoredGraph& g,
                                   const ForbiddenFamily* family);

// The target side of the certificate identity at level 6:
//   C5: (all-red triangle) x (8*(red edge) - (2+sqrt2)*(vertex))  in F_C5
//   C7: (all-red triangle) x (9*(red edge) - 4*(vertex))          in F_C7
GraphCombo target_expression(Problem p);

// Expanded contribution of one slack term at the given level.
GraphCombo slack_expansion(const SlackTerm& term, int level,
                           const ForbiddenFamily* family);

// Flag basis size used by blocks at a given identity level (2s - 2 = level).
int block_flag_size(int level);

// Hash pinning the basis order the certificate indices refer to.
std::string certificate_basis_hash(Problem p, int level);

// Level-`level` graphs whose c_H must be strictly positive: those containing
// an induced copy of any P5-coloring or C4X (C5 problem) / any P4-coloring
// (C7 problem).
const std::set<CanonicalForm>& side_condition_keys(Problem p, int level);

// The side-condition pattern families themselves.
const std::vector<ColoredGraph>& p4_colorings();
const std::vector<ColoredGraph>& p5_colorings();
const ColoredGraph& c4x_graph();

VerificationReport verify(const Certificate& cert);

Certificate parse_certificate(const std::string& text);
std::string emit_certificate(const Certificate& cert);

}  // namespace flagcert

#endif
