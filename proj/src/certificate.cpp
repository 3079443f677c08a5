#include "flagcert/certificate.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "flagcert/cache.hpp"
#include "flagcert/parallel.hpp"
#include "flagcert/enumerate.hpp"

namespace flagcert {

Problem problem_from_string(const std::string& name) {
  if (name == "C5") return Problem::C5;
  if (name == "C7") return Problem::C7;
  throw std::invalid_argument("unknown problem: " + name);
}

std::string problem_to_string(Problem p) {
  return p == Problem::C5 ? "C5" : "C7";
}

const ForbiddenFamily* problem_family(Problem p) {
  return p == Problem::C5 ? &family_fc5() : &family_fc7();
}

bool Certificate::operator==(const Certificate& o) const {
  if (problem != o.problem || level != o.level || c != o.c ||
      !(target == o.target) || blocks.size() != o.blocks.size() ||
      slack_terms.size() != o.slack_terms.size())
    return false;
  for (size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].sigma_name != o.blocks[i].sigma_name ||
        !(blocks[i].matrix == o.blocks[i].matrix))
      return false;
  for (size_t i = 0; i < slack_terms.size(); ++i)
    if (slack_terms[i].coeff != o.slack_terms[i].coeff ||
        slack_terms[i].g1 != o.slack_terms[i].g1 ||
        slack_terms[i].g2 != o.slack_terms[i].g2)
      return false;
  return true;
}

namespace {

ColoredGraph single_vertex() { return ColoredGraph(1); }

ColoredGraph two_vertex(EdgeColor c) {
  ColoredGraph g(2);
  g.set_color(0, 1, c);
  return g;
}

ColoredGraph red_triangle() {
  ColoredGraph g(3);
  g.set_color(0, 1, EdgeColor::Red);
  g.set_color(0, 2, EdgeColor::Red);
  g.set_color(1, 2, EdgeColor::Red);
  return g;
}

}  // namespace

GraphCombo base_constraint_combo() {
  GraphCombo combo;
  combo.level = 2;
  combo.add(canonical_form(two_vertex(EdgeColor::Red)), QSqrt2(1));
  combo.add(canonical_form(two_vertex(EdgeColor::Blue)), QSqrt2(1));
  combo.add(canonical_form(two_vertex(EdgeColor::None)), QSqrt2(-1));
  return combo;
}

GraphCombo multiply_combo_by_graph(const GraphCombo& combo,
                                   const ColoredGraph& g,
                                   const ForbiddenFamily* family) {
  if (g.vertex_count() == 0) return combo;
  GraphCombo out;
  out.level = combo.level + g.vertex_count();
  for (const auto& [key, coeff] : combo.terms) {
    GraphCombo product =
        graph_product(ColoredGraph::decode(key), g, family);
    product *= coeff;
    out += product;
  }
  out.level = combo.level + g.vertex_count();
  return out;
}

GraphCombo target_expression(Problem p) {
  const ForbiddenFamily* family = problem_family(p);
  const QSqrt2 red_scale =
      p == Problem::C5 ? QSqrt2(8) : QSqrt2(9);
  const QSqrt2 vertex_scale =
      p == Problem::C5 ? QSqrt2(Rational(2), Rational(1))  // 2 + sqrt2
                       : QSqrt2(4);

  GraphCombo with_edge =
      graph_product(red_triangle(), two_vertex(EdgeColor::Red), family);
  GraphCombo with_vertex =
      graph_product(red_triangle(), single_vertex(), family);

  GraphCombo target = red_scale * extend_level(with_edge, 6, family);
  target -= vertex_scale * extend_level(with_vertex, 6, family);
  return target;
}

GraphCombo slack_expansion(const SlackTerm& term, int level,
                           const ForbiddenFamily* family) {
  int product_level =
      2 + term.g1.vertex_count() + term.g2.vertex_count();
  if (product_level > level)
    throw std::invalid_argument(
        "slack term exceeds the identity level: needs level " +
        std::to_string(product_level));
  GraphCombo combo = base_constraint_combo();
  combo = multiply_combo_by_graph(combo, term.g1, family);
  combo = multiply_combo_by_graph(combo, term.g2, family);
  combo = extend_level(combo, level, family);
  combo *= term.coeff;
  return combo;
}

int block_flag_size(int level) {
  if (level % 2 != 0)
    throw std::invalid_argument("block expansion needs an even level");
  return (level + 2) / 2;
}

std::string certificate_basis_hash(Problem p, int level) {
  const ForbiddenFamily* family = problem_family(p);
  const int size = block_flag_size(level);
  std::string text = problem_to_string(p) + "|" + std::to_string(level);
  for (const char* name : {"lambda", "beta", "rho"}) {
    const FlagBasis& basis =
        FlagBasis::get(TypeSigma::by_name(name), size, family);
    text += std::string("|") + name + "\n" + basis.dump();
  }
  return hex64(fnv1a(text));
}

namespace {

std::vector<ColoredGraph> path_colorings(int vertices) {
  std::vector<ColoredGraph> out;
  std::set<CanonicalForm> seen;
  const int edges = vertices - 1;
  for (int bits = 0; bits < (1 << edges); ++bits) {
    ColoredGraph g(vertices);
    for (int e = 0; e < edges; ++e)
      g.set_color(e, e + 1,
                  (bits >> e) & 1 ? EdgeColor::Blue : EdgeColor::Red);
    CanonicalForm key = canonical_form(g);
    if (seen.insert(key).second) out.push_back(ColoredGraph::decode(key));
  }
  return out;
}

}  // namespace

const std::vector<ColoredGraph>& p4_colorings() {
  static std::vector<ColoredGraph> table = path_colorings(4);
  return table;
}

const std::vector<ColoredGraph>& p5_colorings() {
  static std::vector<ColoredGraph> table = path_colorings(5);
  return table;
}

const ColoredGraph& c4x_graph() {
  // 4-cycle 0-1-2-3 with the single blue edge {0,1}, plus the pendant red
  // edge {2,4} away from both blue endpoints
  static ColoredGraph g = [] {
    ColoredGraph g(5);
    g.set_color(0, 1, EdgeColor::Blue);
    g.set_color(1, 2, EdgeColor::Red);
    g.set_color(2, 3, EdgeColor::Red);
    g.set_color(3, 0, EdgeColor::Red);
    g.set_color(2, 4, EdgeColor::Red);
    return g;
  }();
  return g;
}

const std::set<CanonicalForm>& side_condition_keys(Problem p, int level) {
  static std::mutex mutex;
  static std::map<std::pair<Problem, int>, std::set<CanonicalForm>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({p, level});
  if (it != cache.end()) return it->second;

  std::vector<ColoredGraph> patterns;
  if (p == Problem::C5) {
    patterns = p5_colorings();
    patterns.push_back(c4x_graph());
  } else {
    patterns = p4_colorings();
  }

  std::set<CanonicalForm> keys;
  for (const ColoredGraph& h :
       enumerate_colored_graphs(level, problem_family(p))) {
    for (const ColoredGraph& pattern : patterns) {
      if (contains_pattern(h, PatternGraph(pattern), /*induced=*/true)) {
        keys.insert(h.encode());
        break;
      }
    }
  }
  return cache.emplace(std::make_pair(p, level), std::move(keys))
      .first->second;
}

VerificationReport verify(const Certificate& cert) {
  const ForbiddenFamily* family = problem_family(cert.problem);
  VerificationReport report;

  // per-block work (PSD pass and expansion) runs in parallel; results are
  // merged in block order, so the report never depends on the thread count
  const size_t nblocks = cert.blocks.size();
  std::vector<char> block_psd(nblocks, 0);  // char: concurrent index writes
  std::vector<GraphCombo> block_combos(nblocks);
  parallel_for(nblocks, [&](size_t i) {
    const CertificateBlock& block = cert.blocks[i];
    if (block.matrix.has_factorization()) {
      PsdVerdict core = psd_check(block.matrix.factorization().core);
      // a positive definite core makes M^T core M PSD by congruence
      block_psd[i] = core.positive_definite
                         ? true
                         : psd_check(factored_value(block.matrix)).psd;
    } else {
      block_psd[i] = psd_check(block.matrix).psd;
    }
    const SymMatrixQ dense = block.matrix.has_factorization()
                                 ? factored_value(block.matrix)
                                 : block.matrix;
    const TypeSigma sigma = TypeSigma::by_name(block.sigma_name);
    const FlagBasis& basis =
        FlagBasis::get(sigma, block_flag_size(cert.level), family);
    block_combos[i] = quadratic_form_expand(sigma, basis, dense, family);
  });

  // (1) positive semidefiniteness of every block
  report.psd_ok = true;
  for (size_t i = 0; i < nblocks; ++i) {
    if (!block_psd[i]) {
      report.psd_ok = false;
      report.violations.emplace_back("block " + cert.blocks[i].sigma_name,
                                     "matrix is not positive semidefinite");
    }
  }

  // (2) the exact identity at the certificate level
  GraphCombo total;
  total.level = cert.level;
  for (const GraphCombo& combo : block_combos) total += combo;
  for (const SlackTerm& term : cert.slack_terms)
    total += slack_expansion(term, cert.level, family);
  for (const auto& [key, coeff] : cert.c) total.add(key, coeff);

  report.diff = total - cert.target;
  report.identity_ok = report.diff.empty();
  if (!report.identity_ok) {
    for (const auto& [key, coeff] : report.diff.terms)
      report.violations.emplace_back(key,
                                     "identity residual " +
                                         format_qsqrt2(coeff));
  }

  // (3) side conditions: strict positivity of c_H on the flagged set,
  // plus the nonnegativity promises of the certificate
  report.side_conditions_ok = true;
  for (const auto& [key, coeff] : cert.c) {
    if (coeff.sign() < 0) {
      report.side_conditions_ok = false;
      report.violations.emplace_back(key, "negative c coefficient");
    }
  }
  for (const SlackTerm& term : cert.slack_terms) {
    if (term.coeff.sign() < 0) {
      report.side_conditions_ok = false;
      report.violations.emplace_back(term.g1.encode() + "," + term.g2.encode(),
                                     "negative slack coefficient");
    }
  }
  for (const CanonicalForm& key : side_condition_keys(cert.problem, cert.level)) {
    auto it = cert.c.find(key);
    if (it == cert.c.end() || it->second.sign() <= 0) {
      report.side_conditions_ok = false;
      report.violations.emplace_back(
          key, "c must be strictly positive (induced side-condition graph)");
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// file format

namespace {

class TokenReader {
 public:
  explicit TokenReader(const std::string& text) {
    int line = 1;
    std::string token;
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        if (!token.empty()) {
          tokens_.emplace_back(std::move(token), line);
          token.clear();
        }
        if (c == '\n') ++line;
      } else {
        token.push_back(c);
      }
    }
    if (!token.empty()) tokens_.emplace_back(std::move(token), line);
  }

  std::string next(const std::string& what) {
    if (pos_ >= tokens_.size())
      throw std::runtime_error("line " + std::to_string(line()) +
                               ": unexpected end of file, expected " + what);
    return tokens_[pos_++].first;
  }

  bool peek_token(std::string& out) {
    if (pos_ >= tokens_.size()) return false;
    out = tokens_[pos_].first;
    return true;
  }

  int line() const {
    if (tokens_.empty()) return 1;
    size_t i = pos_ < tokens_.size() ? pos_ : tokens_.size() - 1;
    return tokens_[i].second;
  }

 private:
  std::vector<std::pair<std::string, int>> tokens_;
  size_t pos_ = 0;
};

QSqrt2 read_number(TokenReader& reader, const std::string& what) {
  std::string token = reader.next(what);
  try {
    return parse_qsqrt2(token);
  } catch (const std::exception& e) {
    throw std::runtime_error("line " + std::to_string(reader.line()) + ": " +
                             e.what());
  }
}

int read_int(TokenReader& reader, const std::string& what) {
  std::string token = reader.next(what);
  try {
    size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(reader.line()) +
                             ": bad integer '" + token + "' for " + what);
  }
}

SymMatrixQ read_dense(TokenReader& reader, int dim) {
  SymMatrixQ m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      m.set(i, j, read_number(reader, "matrix entry"));
  return m;
}

}  // namespace

Certificate parse_certificate(const std::string& text) {
  TokenReader reader(text);
  Certificate cert;

  std::string keyword = reader.next("'problem'");
  if (keyword != "problem")
    throw std::runtime_error("line " + std::to_string(reader.line()) +
                             ": certificate must start with 'problem'");
  cert.problem = problem_from_string(reader.next("problem name"));

  std::string token;
  while (reader.peek_token(token)) {
    reader.next("keyword");
    if (token == "level") {
      cert.level = read_int(reader, "level");
      if (cert.level < 2 || cert.level > kEnumerateMaxVertices)
        throw std::runtime_error("line " + std::to_string(reader.line()) +
                                 ": unsupported certificate level");
    } else if (token == "basis-hash") {
      cert.basis_hash = reader.next("hash value");
    } else if (token == "block") {
      CertificateBlock block;
      block.sigma_name = reader.next("block type");
      if (block.sigma_name != "lambda" && block.sigma_name != "beta" &&
          block.sigma_name != "rho")
        throw std::runtime_error("line " + std::to_string(reader.line()) +
                                 ": unknown block type " + block.sigma_name);
      int dim = read_int(reader, "block dimension");
      std::string storage = reader.next("'dense' or 'factored'");
      if (storage == "dense") {
        block.matrix = read_dense(reader, dim);
      } else if (storage == "factored") {
        int rows = read_int(reader, "factor rows");
        int cols = read_int(reader, "factor cols");
        if (cols != dim)
          throw std::runtime_error("line " + std::to_string(reader.line()) +
                                   ": factor columns must equal block dim");
        MatrixQ m(rows, cols);
        for (int i = 0; i < rows; ++i)
          for (int j = 0; j < cols; ++j)
            m.at(i, j) = read_number(reader, "factor entry");
        std::string core_kw = reader.next("'core'");
        if (core_kw != "core")
          throw std::runtime_error("line " + std::to_string(reader.line()) +
                                   ": expected 'core' after factor entries");
        int core_dim = read_int(reader, "core dimension");
        if (core_dim != rows)
          throw std::runtime_error("line " + std::to_string(reader.line()) +
                                   ": core dimension must equal factor rows");
        SymMatrixQ core = read_dense(reader, core_dim);
        block.matrix = SymMatrixQ(dim);
        block.matrix.attach_factorization(std::move(m), std::move(core));
      } else {
        throw std::runtime_error("line " + std::to_string(reader.line()) +
                                 ": expected 'dense' or 'factored', got " +
                                 storage);
      }
      cert.blocks.push_back(std::move(block));
    } else if (token == "slack") {
      SlackTerm term;
      term.coeff = read_number(reader, "slack coefficient");
      if (term.coeff.sign() < 0)
        throw std::runtime_error("line " + std::to_string(reader.line()) +
                                 ": negative slack coefficient");
      term.g1 = ColoredGraph::decode(reader.next("slack graph 1"));
      term.g2 = ColoredGraph::decode(reader.next("slack graph 2"));
      cert.slack_terms.push_back(std::move(term));
    } else if (token == "c") {
      std::string encoding = reader.next("graph encoding");
      QSqrt2 coeff = read_number(reader, "c coefficient");
      if (coeff.sign() < 0)
        throw std::runtime_error("line " + std::to_string(reader.line()) +
                                 ": negative c coefficient for " + encoding);
      cert.c[canonical_form(ColoredGraph::decode(encoding))] = coeff;
    } else if (token == "target") {
      std::string encoding = reader.next("graph encoding");
      QSqrt2 coeff = read_number(reader, "target coefficient");
      ColoredGraph g = ColoredGraph::decode(encoding);
      if (!cert.target.terms.empty() &&
          cert.target.level != g.vertex_count())
        throw std::runtime_error("line " + std::to_string(reader.line()) +
                                 ": target graphs live at mixed levels");
      cert.target.level = g.vertex_count();
      cert.target.add(canonical_form(g), coeff);
    } else {
      throw std::runtime_error("line " + std::to_string(reader.line()) +
                               ": unknown keyword " + token);
    }
  }

  if (!cert.target.terms.empty()) cert.level = cert.target.level;

  // structural validation against the certificate level
  const ForbiddenFamily* family = problem_family(cert.problem);
  for (const auto& [key, coeff] : cert.c) {
    ColoredGraph g = ColoredGraph::decode(key);
    if (g.vertex_count() != cert.level)
      throw std::runtime_error("c graph " + key +
                               " does not live at certificate level " +
                               std::to_string(cert.level));
    if (!is_family_free(g, family))
      throw std::runtime_error("c graph " + key + " is not family-free");
  }
  for (const CertificateBlock& block : cert.blocks) {
    const FlagBasis& basis = FlagBasis::get(TypeSigma::by_name(block.sigma_name),
                                            block_flag_size(cert.level), family);
    if (block.matrix.dim() != basis.count())
      throw std::runtime_error(
          "block " + block.sigma_name + " has dimension " +
          std::to_string(block.matrix.dim()) + " but the basis has " +
          std::to_string(basis.count()) + " flags");
  }
  if (!cert.basis_hash.empty() &&
      cert.basis_hash != certificate_basis_hash(cert.problem, cert.level))
    throw std::runtime_error("basis hash mismatch: certificate indices refer "
                             "to a different basis order");
  return cert;
}

std::string emit_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << "problem " << problem_to_string(cert.problem) << "\n";
  out << "level " << cert.level << "\n";
  std::string hash = cert.basis_hash.empty()
                         ? certificate_basis_hash(cert.problem, cert.level)
                         : cert.basis_hash;
  out << "basis-hash " << hash << "\n";
  for (const CertificateBlock& block : cert.blocks) {
    out << "block " << block.sigma_name << " " << block.matrix.dim() << "\n";
    if (block.matrix.has_factorization()) {
      const MatrixFactorization& f = block.matrix.factorization();
      out << "factored " << f.m.rows() << " " << f.m.cols() << "\n";
      for (int i = 0; i < f.m.rows(); ++i) {
        for (int j = 0; j < f.m.cols(); ++j) {
          if (j) out << ' ';
          out << format_qsqrt2(f.m.at(i, j));
        }
        out << "\n";
      }
      out << "core " << f.core.dim() << "\n";
      for (int i = 0; i < f.core.dim(); ++i) {
        for (int j = i; j < f.core.dim(); ++j) {
          if (j > i) out << ' ';
          out << format_qsqrt2(f.core.at(i, j));
        }
        out << "\n";
      }
    } else {
      out << "dense\n";
      for (int i = 0; i < block.matrix.dim(); ++i) {
        for (int j = i; j < block.matrix.dim(); ++j) {
          if (j > i) out << ' ';
          out << format_qsqrt2(block.matrix.at(i, j));
        }
        out << "\n";
      }
    }
  }
  for (const SlackTerm& term : cert.slack_terms)
    out << "slack " << format_qsqrt2(term.coeff) << " " << term.g1.encode()
        << " " << term.g2.encode() << "\n";
  for (const auto& [key, coeff] : cert.c)
    out << "c " << key << " " << format_qsqrt2(coeff) << "\n";
  for (const auto& [key, coeff] : cert.target.terms)
    out << "target " << key << " " << format_qsqrt2(coeff) << "\n";
  return out.str();
}

}  // namespace flagcert
