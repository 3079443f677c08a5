#ifndef FLAGCERT_STABILITY_HPP
#define FLAGCERT_STABILITY_HPP

#include <array>

#include "flagcert/qsqrt2.hpp"

namespace flagcert {

// The two optimization subproblems behind the stability analysis, solved
// exactly and re-checked on a rational grid.
struct StabilityOptima {
  // maximize a^2 + (1-a)^2/2 for a in [1/grid_steps, 2/3]
  Rational bipartite_argmax;  // 2/3
  Rational bipartite_value;   // 1/2
  bool bipartite_sweep_ok = false;

  // maximize 2ab + 2bc + 2cd + d^2 with a,b,c >= 0, d = 1-a-b-c,
  // ab >= (2-sqrt2)/16, d >= 1/grid_steps
  std::array<QSqrt2, 4> quad_argmax;  // ((2-sqrt2)/4, 1/4, 1/4, sqrt2/4)
  QSqrt2 quad_value;                  // 1/2
  bool quad_sweep_ok = false;

  long grid_steps = 0;
};

StabilityOptima stability_optimizers(long grid_steps = 200);

}  // namespace flagcert

#endif
