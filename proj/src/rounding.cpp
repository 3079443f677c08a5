#include "flagcert/rounding.hpp"

#include <sstream>

#include "flagcert/enumerate.hpp"

namespace flagcert {

namespace {

RawEntry parse_raw_entry(const std::string& token) {
  RawEntry entry;
  size_t semi = token.find(';');
  try {
    if (semi == std::string::npos) {
      entry.p = std::stod(token);
    } else {
      entry.p = std::stod(token.substr(0, semi));
      entry.q = std::stod(token.substr(semi + 1));
    }
  } catch (const std::exception&) {
    throw std::runtime_error("bad raw entry: " + token);
  }
  return entry;
}

QSqrt2 round_entry(const RawEntry& entry, unsigned long bound) {
  Rational p = approximate_with_bounded_denominator(Rational(entry.p), bound);
  Rational q = approximate_with_bounded_denominator(Rational(entry.q), bound);
  return QSqrt2(p, q);
}

}  // namespace

RawSolution parse_raw_solution(const std::string& text) {
  std::istringstream in(text);
  RawSolution raw;
  std::string keyword;
  bool have_problem = false;
  while (in >> keyword) {
    if (keyword == "problem") {
      std::string name;
      in >> name;
      raw.problem = problem_from_string(name);
      have_problem = true;
    } else if (keyword == "level") {
      in >> raw.level;
    } else if (keyword == "block") {
      RawBlock block;
      in >> block.sigma_name >> block.dim;
      if (!in || block.dim <= 0)
        throw std::runtime_error("bad raw block header");
      int entries = block.dim * (block.dim + 1) / 2;
      // optional factor form: "block <name> <dim> factor <rows>"
      if (in.peek() != EOF) {
        std::streampos pos = in.tellg();
        std::string maybe_factor;
        if (in >> maybe_factor && maybe_factor == "factor") {
          if (!(in >> block.factor_rows) || block.factor_rows <= 0)
            throw std::runtime_error("bad factor row count for block " +
                                     block.sigma_name);
          entries = block.factor_rows * block.dim;
        } else {
          in.clear();
          in.seekg(pos);
        }
      }
      std::vector<RawEntry>& slot =
          block.factor_rows > 0 ? block.factor : block.upper;
      slot.reserve(entries);
      for (int i = 0; i < entries; ++i) {
        std::string token;
        if (!(in >> token))
          throw std::runtime_error("raw block " + block.sigma_name +
                                   " is truncated");
        slot.push_back(parse_raw_entry(token));
      }
      raw.blocks.push_back(std::move(block));
    } else if (keyword == "slack") {
      std::string value, g1, g2;
      if (!(in >> value >> g1 >> g2))
        throw std::runtime_error("bad raw slack line");
      raw.slack.push_back({parse_raw_entry(value),
                           {ColoredGraph::decode(g1), ColoredGraph::decode(g2)}});
    } else if (keyword == "target") {
      std::string encoding, coeff;
      if (!(in >> encoding >> coeff))
        throw std::runtime_error("bad raw target line");
      ColoredGraph g = ColoredGraph::decode(encoding);
      raw.target.level = g.vertex_count();
      raw.target.add(canonical_form(g), parse_qsqrt2(coeff));
    } else {
      throw std::runtime_error("unknown raw keyword: " + keyword);
    }
  }
  if (!have_problem)
    throw std::runtime_error("raw solution lacks a 'problem' line");
  return raw;
}

Certificate round_solution(const RawSolution& raw,
                           unsigned long denominator_bound) {
  const ForbiddenFamily* family = problem_family(raw.problem);
  Certificate cert;
  cert.problem = raw.problem;
  cert.level = raw.level;

  for (const RawBlock& rb : raw.blocks) {
    const FlagBasis& basis = FlagBasis::get(TypeSigma::by_name(rb.sigma_name),
                                            block_flag_size(cert.level), family);
    if (rb.dim != basis.count())
      throw std::invalid_argument("raw block " + rb.sigma_name +
                                  " dimension does not match the basis");
    CertificateBlock block;
    block.sigma_name = rb.sigma_name;
    block.matrix = SymMatrixQ(rb.dim);
    if (rb.factor_rows > 0) {
      // round the factor; V^T V with an identity core is psd for free
      MatrixQ factor(rb.factor_rows, rb.dim);
      size_t idx = 0;
      for (int i = 0; i < rb.factor_rows; ++i)
        for (int j = 0; j < rb.dim; ++j)
          factor.at(i, j) = round_entry(rb.factor[idx++], denominator_bound);
      block.matrix.attach_factorization(std::move(factor),
                                        SymMatrixQ::identity(rb.factor_rows));
    } else {
      size_t idx = 0;
      for (int i = 0; i < rb.dim; ++i)
        for (int j = i; j < rb.dim; ++j)
          block.matrix.set(i, j,
                           round_entry(rb.upper[idx++], denominator_bound));
    }
    cert.blocks.push_back(std::move(block));
  }

  for (const auto& [entry, graphs] : raw.slack) {
    QSqrt2 coeff = round_entry(entry, denominator_bound);
    if (coeff.sign() < 0)
      throw RoundingError(
          "slack coefficient rounded negative; try a larger denominator bound");
    if (coeff.is_zero()) continue;
    cert.slack_terms.push_back(SlackTerm{coeff, graphs.first, graphs.second});
  }

  cert.target = raw.target.terms.empty() ? target_expression(raw.problem)
                                         : raw.target;
  if (cert.target.level != cert.level)
    throw std::invalid_argument("target level does not match raw level");

  // c_H picks up the exact slack between the target and the expanded sum
  GraphCombo expanded;
  expanded.level = cert.level;
  for (const CertificateBlock& block : cert.blocks) {
    TypeSigma sigma = TypeSigma::by_name(block.sigma_name);
    const FlagBasis& basis =
        FlagBasis::get(sigma, block_flag_size(cert.level), family);
    const SymMatrixQ dense = block.matrix.has_factorization()
                                 ? factored_value(block.matrix)
                                 : block.matrix;
    expanded += quadratic_form_expand(sigma, basis, dense, family);
  }
  for (const SlackTerm& term : cert.slack_terms)
    expanded += slack_expansion(term, cert.level, family);

  GraphCombo residual = cert.target - expanded;
  for (const auto& [key, coeff] : residual.terms) {
    if (coeff.sign() < 0)
      throw RoundingError("rounded solution overshoots the target on " + key +
                          " by " + format_qsqrt2(-coeff) +
                          "; try a larger denominator bound");
    cert.c[key] = coeff;
  }
  return cert;
}

}  // namespace flagcert
