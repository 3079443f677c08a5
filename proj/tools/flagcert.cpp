// flagcert: command-line workbench for red/blue-colored flag algebras,
// sum-of-squares certificate verification and the extremal-graph oracles.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "flagcert/algebra.hpp"
#include "flagcert/certificate.hpp"
#include "flagcert/enumerate.hpp"
#include "flagcert/extremal.hpp"
#include "flagcert/flag.hpp"
#include "flagcert/parallel.hpp"
#include "flagcert/rounding.hpp"
#include "flagcert/sdpa.hpp"
#include "flagcert/stability.hpp"

using namespace flagcert;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

std::string number_cell(const QSqrt2& value, bool approx) {
  std::string out = format_qsqrt2(value);
  if (approx) {
    char buf[40];
    std::snprintf(buf, sizeof buf, " (%.12g)", value.to_double());
    out += buf;
  }
  return out;
}

json quadruple_json(const Quadruple& q) {
  return json{{"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.d}};
}

struct Options {
  bool use_json = false;
  bool approx = false;
};

int cmd_enumerate(int n, const std::string& family_name, bool count_only,
                  const Options& opt) {
  const ForbiddenFamily* family = family_by_name(family_name);
  const std::vector<ColoredGraph>& graphs = enumerate_colored_graphs(n, family);
  if (opt.use_json) {
    json out{{"n", n}, {"family", family_name}, {"count", graphs.size()}};
    if (!count_only) {
      json list = json::array();
      for (const ColoredGraph& g : graphs) list.push_back(g.encode());
      out["graphs"] = list;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (count_only) {
    std::cout << graphs.size() << "\n";
    return kExitOk;
  }
  for (const ColoredGraph& g : graphs) std::cout << g.encode() << "\n";
  return kExitOk;
}

int cmd_flags(const std::string& sigma_name, int size,
              const std::string& family_name, bool count_only,
              const Options& opt) {
  const ForbiddenFamily* family = family_by_name(family_name);
  const FlagBasis& basis =
      FlagBasis::get(TypeSigma::by_name(sigma_name), size, family);
  if (opt.use_json) {
    json out{{"sigma", sigma_name},
             {"size", size},
             {"family", family_name},
             {"count", basis.count()}};
    if (!count_only) {
      json list = json::array();
      for (const Flag& f : basis.flags()) {
        json roots = json::array();
        for (int r : f.root) roots.push_back(r);
        list.push_back(json{{"graph", f.graph.encode()}, {"root", roots}});
      }
      out["flags"] = list;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  if (count_only) {
    std::cout << basis.count() << "\n";
    return kExitOk;
  }
  std::cout << basis.dump();
  return kExitOk;
}

int cmd_target(const std::string& problem_name, const Options& opt) {
  Problem problem = problem_from_string(problem_name);
  GraphCombo target = target_expression(problem);
  if (opt.use_json) {
    json terms = json::array();
    for (const auto& [key, coeff] : target.terms) {
      json term{{"graph", key}, {"coeff", format_qsqrt2(coeff)}};
      if (opt.approx) term["approx"] = coeff.to_double();
      terms.push_back(term);
    }
    std::cout << json{{"problem", problem_name},
                      {"level", target.level},
                      {"terms", terms}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }
  for (const auto& [key, coeff] : target.terms)
    std::cout << key << " " << number_cell(coeff, opt.approx) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, const Options& opt) {
  Certificate cert = parse_certificate(read_file(path));
  VerificationReport report = verify(cert);
  if (opt.use_json) {
    json violations = json::array();
    for (const auto& [what, why] : report.violations)
      violations.push_back(json{{"where", what}, {"reason", why}});
    json residual = json::array();
    for (const auto& [key, coeff] : report.diff.terms)
      residual.push_back(json{{"graph", key}, {"coeff", format_qsqrt2(coeff)}});
    std::cout << json{{"identity_ok", report.identity_ok},
                      {"psd_ok", report.psd_ok},
                      {"side_conditions_ok", report.side_conditions_ok},
                      {"residual", residual},
                      {"violations", violations}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "identity:        " << (report.identity_ok ? "ok" : "FAILED")
              << "\n";
    std::cout << "psd blocks:      " << (report.psd_ok ? "ok" : "FAILED")
              << "\n";
    std::cout << "side conditions: "
              << (report.side_conditions_ok ? "ok" : "FAILED") << "\n";
    for (const auto& [what, why] : report.violations)
      std::cout << "  " << what << ": " << why << "\n";
  }
  return report.all_ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_oracle(int n, int length, int max_witnesses, const Options& opt) {
  ExtremalReport report = brute_force_min(n, length);
  bool duality = duality_check(report);
  if (opt.use_json) {
    json witnesses = json::array();
    int printed = 0;
    for (const ColoredGraph& w : report.witnesses) {
      if (max_witnesses >= 0 && printed >= max_witnesses) break;
      witnesses.push_back(w.encode());
      ++printed;
    }
    std::cout << json{{"n", report.n},
                      {"L", report.cycle_length},
                      {"budget", report.budget},
                      {"min_cycle_edges", report.min_cycle_edges},
                      {"witness_count", report.witnesses.size()},
                      {"witnesses", witnesses},
                      {"classes_with_budget", report.stats.classes_with_budget},
                      {"duality_ok", duality}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << report.n << "\t" << report.cycle_length << "\t"
              << report.budget << "\t" << report.min_cycle_edges;
    int printed = 0;
    for (const ColoredGraph& w : report.witnesses) {
      if (max_witnesses >= 0 && printed >= max_witnesses) break;
      std::cout << "\t" << w.encode();
      ++printed;
    }
    std::cout << "\n";
    std::cout << "# classes with exact budget: "
              << report.stats.classes_with_budget
              << ", duality check: " << (duality ? "ok" : "FAILED") << "\n";
  }
  return duality ? kExitOk : kExitVerifyFailed;
}

int cmd_construct(const std::string& which, int n, const std::string& quad_text,
                  bool colored, int cycle_length, const Options& opt) {
  ColoredGraph g;
  json extra;
  if (which == "clique-bipartite" || which == "g1") {
    g = colored ? clique_bipartite_construction_colored(n) : clique_bipartite_construction(n);
  } else if (which == "path-blowup" || which == "g2") {
    Quadruple q;
    if (quad_text.empty()) {
      q = default_blowup_quadruple(n);
    } else {
      std::istringstream qs(quad_text);
      char comma;
      if (!(qs >> q.a >> comma >> q.b >> comma >> q.c >> comma >> q.d))
        throw std::invalid_argument("bad quadruple, expected a,b,c,d");
    }
    extra = quadruple_json(q);
    g = path_blowup_construction(n, q);
  } else if (which == "extremal") {
    g = extremal_structure(n);
    ExtremalParts parts = extremal_parts(n);
    extra = json{{"A", parts.a}, {"B", parts.b}, {"C", parts.c}, {"D", parts.d}};
  } else {
    throw std::invalid_argument("unknown construction: " + which);
  }

  long long cycle_edges = -1;
  if (cycle_length > 0)
    cycle_edges = static_cast<long long>(cycle_edge_set(g, cycle_length).size());

  if (opt.use_json) {
    json out{{"which", which},
             {"n", g.vertex_count()},
             {"edges", g.edge_count()},
             {"budget", edge_budget(g.vertex_count())},
             {"graph", g.encode()}};
    if (!extra.is_null()) out["parts"] = extra;
    if (cycle_edges >= 0) {
      out["cycle_length"] = cycle_length;
      out["cycle_edges"] = cycle_edges;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << g.encode() << "\n";
    std::cout << "# n=" << g.vertex_count() << " edges=" << g.edge_count()
              << " budget=" << edge_budget(g.vertex_count());
    if (cycle_edges >= 0)
      std::cout << " cycle_edges(L=" << cycle_length << ")=" << cycle_edges;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_qp(long long n, const Options& opt) {
  QpSolution solution = solve_extremal_qp(n);
  if (opt.use_json) {
    json maximizers = json::array();
    for (size_t i = 0; i < solution.maximizers.size(); ++i) {
      json entry = quadruple_json(solution.maximizers[i]);
      entry["margin"] = solution.feasibility_margin[i];
      maximizers.push_back(entry);
    }
    std::cout << json{{"n", n},
                      {"optimal_ab", solution.optimal_ab},
                      {"maximizers", maximizers}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "n=" << n << " optimal a*b=" << solution.optimal_ab << "\n";
    for (size_t i = 0; i < solution.maximizers.size(); ++i) {
      const Quadruple& q = solution.maximizers[i];
      std::cout << q.a << "," << q.b << "," << q.c << "," << q.d
                << "\tmargin=" << solution.feasibility_margin[i] << "\n";
    }
  }
  return kExitOk;
}

int cmd_formulas(long long n_max, const Options& opt) {
  if (opt.use_json) {
    json rows = json::array();
    for (long long n = 1; n <= n_max; ++n)
      rows.push_back(json{{"n", n}, {"F", f_formula(n)}});
    std::cout << json{{"rows", rows}}.dump(2) << "\n";
  } else {
    for (long long n = 1; n <= n_max; ++n)
      std::cout << n << " " << f_formula(n) << "\n";
  }
  return kExitOk;
}

int cmd_stability(long grid, const Options& opt) {
  StabilityOptima result = stability_optimizers(grid);
  if (opt.use_json) {
    json quad = json::array();
    for (const QSqrt2& x : result.quad_argmax)
      quad.push_back(format_qsqrt2(x));
    std::cout << json{{"bipartite_argmax", format_rational(result.bipartite_argmax)},
                      {"bipartite_value", format_rational(result.bipartite_value)},
                      {"bipartite_sweep_ok", result.bipartite_sweep_ok},
                      {"quad_argmax", quad},
                      {"quad_value", format_qsqrt2(result.quad_value)},
                      {"quad_sweep_ok", result.quad_sweep_ok},
                      {"grid_steps", result.grid_steps}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "bipartite objective: argmax a = "
              << format_rational(result.bipartite_argmax) << ", value "
              << number_cell(QSqrt2(result.bipartite_value), opt.approx)
              << ", grid sweep " << (result.bipartite_sweep_ok ? "ok" : "FAILED")
              << "\n";
    std::cout << "four-part objective: argmax (";
    for (size_t i = 0; i < result.quad_argmax.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << number_cell(result.quad_argmax[i], opt.approx);
    }
    std::cout << "), value " << number_cell(result.quad_value, opt.approx)
              << ", grid sweep " << (result.quad_sweep_ok ? "ok" : "FAILED")
              << "\n";
  }
  return result.bipartite_sweep_ok && result.quad_sweep_ok ? kExitOk
                                                           : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flag-algebra certificate workbench for edges in odd cycles"};
  app.require_subcommand(1);

  Options opt;
  int threads = 0;
  app.add_option("--threads", threads, "worker thread cap (0 = all cores)");

  // global options remain usable after the subcommand name
  auto add_subcommand = [&app](const std::string& name,
                               const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  auto* enumerate = add_subcommand("enumerate",
                                   "family-free colored graphs at level n");
  int enum_n = 0;
  std::string enum_family = "NONE";
  bool enum_count_only = false;
  enumerate->add_option("-n,--n", enum_n, "vertex count (0..7)")->required();
  enumerate->add_option("--family", enum_family, "NONE, FC5 or FC7");
  enumerate->add_flag("--count-only", enum_count_only, "print only the count");
  enumerate->add_flag("--json", opt.use_json, "JSON output");

  auto* flags = add_subcommand("flags", "rooted flag basis dump");
  std::string flags_sigma = "lambda";
  int flags_size = 4;
  std::string flags_family = "FC5";
  bool flags_count_only = false;
  flags->add_option("--sigma", flags_sigma, "lambda, beta or rho")->required();
  flags->add_option("--size", flags_size, "flag vertex count");
  flags->add_option("--family", flags_family, "NONE, FC5 or FC7");
  flags->add_flag("--count-only", flags_count_only, "print only the count");
  flags->add_flag("--json", opt.use_json, "JSON output");

  auto* target = add_subcommand("target",
                                    "level-6 target expression of a problem");
  std::string target_problem = "C5";
  target->add_option("--problem", target_problem, "C5 or C7")->required();
  target->add_flag("--json", opt.use_json, "JSON output");
  target->add_flag("--approx", opt.approx, "append decimal approximations");

  auto* verify_cmd = add_subcommand("verify", "verify a certificate file");
  std::string verify_path;
  verify_cmd->add_option("certificate", verify_path, "certificate file")
      ->required();
  verify_cmd->add_flag("--json", opt.use_json, "JSON output");

  auto* export_cmd = add_subcommand("export-sdpa",
                                        "write the feasibility SDP");
  std::string export_problem = "C5";
  std::string export_out;
  export_cmd->add_option("--problem", export_problem, "C5 or C7")->required();
  export_cmd->add_option("-o,--output", export_out,
                         "output file (default stdout)");
  export_cmd->add_flag("--json", opt.use_json,
                       "print a JSON summary (needs -o)");

  auto* round_cmd = add_subcommand(
      "round", "round a floating solver solution to an exact certificate");
  std::string round_raw;
  std::string round_out;
  unsigned long round_bound = 1000000;
  round_cmd->add_option("--raw", round_raw, "raw solution file")->required();
  round_cmd->add_option("--denominator-bound", round_bound,
                        "denominator cap for rounding");
  round_cmd->add_option("-o,--output", round_out, "certificate output file");
  round_cmd->add_flag("--json", opt.use_json,
                      "print a JSON summary (needs -o)");

  auto* oracle = add_subcommand("oracle",
                                    "exact minimum of cycle edges at the budget");
  int oracle_n = 0, oracle_len = 5, oracle_witnesses = 4;
  oracle->add_option("-n,--n", oracle_n, "vertex count (<= 9)")->required();
  oracle->add_option("-L,--length", oracle_len, "cycle length (3,5,7,9)");
  oracle->add_option("--witnesses", oracle_witnesses,
                     "witnesses to print (-1 = all)");
  oracle->add_flag("--json", opt.use_json, "JSON output");

  auto* construct = add_subcommand("construct", "extremal constructions");
  std::string construct_which;
  int construct_n = 0;
  std::string construct_quad;
  bool construct_colored = false;
  int construct_cycle = 0;
  construct->add_option("--which", construct_which, "clique-bipartite, path-blowup or extremal")
      ->required();
  construct->add_option("-n,--n", construct_n, "vertex count")->required();
  construct->add_option("--quad", construct_quad, "a,b,c,d parts for g2");
  construct->add_flag("--colored", construct_colored,
                      "color g1 blocks (bipartite blue, clique red)");
  construct->add_option("--cycle-edges", construct_cycle,
                        "also count edges on cycles of this length");
  construct->add_flag("--json", opt.use_json, "JSON output");

  auto* qp = add_subcommand("qp", "integer program behind the quadruples");
  long long qp_n = 0;
  qp->add_option("-n,--n", qp_n, "total size")->required();
  qp->add_flag("--json", opt.use_json, "JSON output");

  auto* formulas = add_subcommand("formulas",
                                      "closed-form minimum cycle-edge counts");
  long long formulas_max = 100;
  formulas->add_option("--n-max", formulas_max, "largest n");
  formulas->add_flag("--json", opt.use_json, "JSON output");

  auto* stability = add_subcommand("stability",
                                       "exact stability optimizers and sweeps");
  long stability_grid = 200;
  stability->add_option("--grid", stability_grid, "sweep resolution");
  stability->add_flag("--json", opt.use_json, "JSON output");
  stability->add_flag("--approx", opt.approx, "append decimal approximations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help path
    app.exit(e);
    return kExitUsage;
  }

  set_thread_count(threads);
  try {
    if (*enumerate)
      return cmd_enumerate(enum_n, enum_family, enum_count_only, opt);
    if (*flags)
      return cmd_flags(flags_sigma, flags_size, flags_family, flags_count_only,
                       opt);
    if (*target) return cmd_target(target_problem, opt);
    if (*verify_cmd) return cmd_verify(verify_path, opt);
    if (*export_cmd) {
      if (opt.use_json && (export_out.empty() || export_out == "-"))
        throw std::invalid_argument("--json needs -o so the SDP has a home");
      std::string sdp = export_sdp(problem_from_string(export_problem));
      write_output(export_out, sdp);
      if (opt.use_json)
        std::cout << json{{"problem", export_problem},
                          {"output", export_out},
                          {"bytes", sdp.size()}}
                         .dump(2)
                  << "\n";
      return kExitOk;
    }
    if (*round_cmd) {
      if (opt.use_json && (round_out.empty() || round_out == "-"))
        throw std::invalid_argument("--json needs -o so the certificate has a home");
      RawSolution raw = parse_raw_solution(read_file(round_raw));
      Certificate cert = round_solution(raw, round_bound);
      write_output(round_out, emit_certificate(cert));
      if (opt.use_json)
        std::cout << json{{"problem", problem_to_string(cert.problem)},
                          {"level", cert.level},
                          {"blocks", cert.blocks.size()},
                          {"slack_terms", cert.slack_terms.size()},
                          {"c_terms", cert.c.size()},
                          {"output", round_out}}
                         .dump(2)
                  << "\n";
      return kExitOk;
    }
    if (*oracle) return cmd_oracle(oracle_n, oracle_len, oracle_witnesses, opt);
    if (*construct)
      return cmd_construct(construct_which, construct_n, construct_quad,
                           construct_colored, construct_cycle, opt);
    if (*qp) return cmd_qp(qp_n, opt);
    if (*formulas) return cmd_formulas(formulas_max, opt);
    if (*stability) return cmd_stability(stability_grid, opt);
  } catch (const RoundingError& e) {
    std::cerr << "rounding failed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
