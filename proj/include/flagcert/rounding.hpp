#ifndef FLAGCERT_ROUNDING_HPP
#define FLAGCERT_ROUNDING_HPP

#include <string>
#include <vector>

#include "flagcert/certificate.hpp"

namespace flagcert {

// Floating entry of a raw solver solution projected onto {1, sqrt2}: a bare
// float is a purely rational coordinate, "p;q" carries both coordinates.
struct RawEntry {
  double p = 0.0;
  double q = 0.0;
};

struct RawBlock {
  std::string sigma_name;
  int dim = 0;
  // dense storage: row-major upper triangle of the block itself
  std::vector<RawEntry> upper;
  // factor storage: a rows x dim factor V; the rounded block is V^T V,
  // positive semidefinite by construction
  int factor_rows = 0;
  std::vector<RawEntry> factor;
};

struct RawSolution {
  Problem problem = Problem::C5;
  int level = 6;
  std::vector<RawBlock> blocks;
  std::vector<std::pair<RawEntry, std::pair<ColoredGraph, ColoredGraph>>> slack;
  GraphCombo target;  // optional override; empty means target_expression()
};

RawSolution parse_raw_solution(const std::string& text);

struct RoundingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Continued-fraction rounding of each (p, q) coordinate with denominators
// bounded by denominator_bound; c_H is then recomputed exactly as the target
// minus the expanded sum. A negative c_H aborts with a RoundingError
// suggesting a larger bound. The verify() outcome of the result is
// authoritative.
Certificate round_solution(const RawSolution& raw,
                           unsigned long denominator_bound);

}  // namespace flagcert

#endif
