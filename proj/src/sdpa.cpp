#include "flagcert/sdpa.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

#include "flagcert/enumerate.hpp"

namespace flagcert {

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

std::vector<SlackTerm> default_slack_layout(Problem p) {
  const ForbiddenFamily* family = problem_family(p);
  std::vector<SlackTerm> out;
  for (const ColoredGraph& g : enumerate_colored_graphs(4, family))
    out.push_back(SlackTerm{QSqrt2(1), g, ColoredGraph(0)});
  return out;
}

std::string export_sdp(Problem p) {
  const ForbiddenFamily* family = problem_family(p);
  const int level = 6;
  const std::vector<ColoredGraph>& graphs =
      enumerate_colored_graphs(level, family);
  const int constraints = static_cast<int>(graphs.size());

  const char* sigma_names[3] = {"lambda", "beta", "rho"};
  const FlagBasis* bases[3];
  const QuadraticExpansion* expansions[3];
  for (int b = 0; b < 3; ++b) {
    TypeSigma sigma = TypeSigma::by_name(sigma_names[b]);
    bases[b] = &FlagBasis::get(sigma, block_flag_size(level), family);
    expansions[b] = &quadratic_expansion(sigma, *bases[b], family);
  }

  std::vector<SlackTerm> slack = default_slack_layout(p);
  // per-slack coefficient of each constraint graph
  std::vector<GraphCombo> slack_columns;
  slack_columns.reserve(slack.size());
  for (const SlackTerm& term : slack)
    slack_columns.push_back(slack_expansion(term, level, family));

  GraphCombo target = target_expression(p);

  std::ostringstream out;
  out << "\" flagcert feasibility SDP, problem " << problem_to_string(p)
      << ": " << constraints << " constraint graphs\n";
  out << "\" blocks: lambda/beta/rho flag bases, slack scalars ("
      << slack.size() << " level-4 multipliers), c_H slacks\n";
  out << constraints << " = mDIM\n";
  out << "5 = nBLOCK\n";
  out << "(" << bases[0]->count() << ", " << bases[1]->count() << ", "
      << bases[2]->count() << ", -" << slack.size() << ", -" << constraints
      << ")\n";

  // right-hand side: target coefficients, one per constraint graph
  for (int h = 0; h < constraints; ++h) {
    if (h) out << ' ';
    out << format_double(target.coefficient(graphs[h].encode()).to_double());
  }
  out << "\n";

  // F0 (objective) is zero: pure feasibility. Constraint matrices follow.
  for (int h = 0; h < constraints; ++h) {
    const int matno = h + 1;
    for (int b = 0; b < 3; ++b) {
      const auto& counts = expansions[b]->counts[h];
      const double norm = expansions[b]->norm.get_d();
      for (const auto& [pair, count] : counts) {
        int i = pair.first, j = pair.second;
        if (i > j) continue;  // symmetric partner carries the same weight
        double value = count * norm;
        out << matno << " " << (b + 1) << " " << (i + 1) << " " << (j + 1)
            << " " << format_double(value) << "\n";
      }
    }
    for (size_t s = 0; s < slack.size(); ++s) {
      QSqrt2 w = slack_columns[s].coefficient(graphs[h].encode());
      if (w.is_zero()) continue;
      out << matno << " 4 " << (s + 1) << " " << (s + 1) << " "
          << format_double(w.to_double()) << "\n";
    }
    out << matno << " 5 " << (h + 1) << " " << (h + 1) << " 1\n";
  }
  return out.str();
}

}  // namespace flagcert
