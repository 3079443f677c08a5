#include "flagcert/stability.hpp"

#include <stdexcept>

namespace flagcert {

StabilityOptima stability_optimizers(long grid_steps) {
  if (grid_steps < 4) throw std::invalid_argument("grid too coarse");
  StabilityOptima out;
  out.grid_steps = grid_steps;
  const long N = grid_steps;

  // (i) bipartite objective f(a) = a^2 + (1-a)^2 / 2
  out.bipartite_argmax = make_rational(2, 3);
  {
    Rational a = out.bipartite_argmax;
    out.bipartite_value = a * a + (1 - a) * (1 - a) / 2;
    if (out.bipartite_value != make_rational(1, 2))
      throw std::logic_error("bipartite optimum is not 1/2");
  }
  // grid points a = i/N over [1/N, 2/3] (the domain has a positive left
  // endpoint; f(0) = 1/2 as well): scaled by 2N^2 the objective is
  // 2 i^2 + (N - i)^2 and the value 1/2 scales to N^2; all exact
  out.bipartite_sweep_ok = true;
  for (long i = 1; 3 * i <= 2 * N; ++i) {
    long long scaled = 2ll * i * i + 1ll * (N - i) * (N - i);
    if (scaled >= 1ll * N * N) {
      out.bipartite_sweep_ok = false;
      break;
    }
  }

  // (ii) the four-part program
  const QSqrt2 quarter(make_rational(1, 4));
  out.quad_argmax = {
      QSqrt2(make_rational(1, 2), make_rational(-1, 4)),  // (2 - sqrt2)/4
      quarter, quarter,
      QSqrt2(Rational(0), make_rational(1, 4))};          // sqrt2/4
  {
    const auto& [a, b, c, d] = out.quad_argmax;
    if (!(a + b + c + d == QSqrt2(1)))
      throw std::logic_error("quad optimum does not sum to one");
    // ab = (2 - sqrt2)/16, tight against the constraint
    QSqrt2 threshold(make_rational(1, 8), make_rational(-1, 16));
    if (!(a * b == threshold))
      throw std::logic_error("quad optimum misses the ab constraint");
    out.quad_value = QSqrt2(2) * a * b + QSqrt2(2) * b * c +
                     QSqrt2(2) * c * d + d * d;
    if (!(out.quad_value == QSqrt2(make_rational(1, 2))))
      throw std::logic_error("quad optimum is not 1/2");
  }

  // grid sweep with a = i/N, b = j/N, c = k/N, d = (N-i-j-k)/N, d >= 1/N.
  // Scaled by N^2: objective 2ij + 2jk + 2kl + l^2 < N^2/2 must hold at
  // every feasible point. The constraint ab >= (2-sqrt2)/16 becomes
  // 16 ij >= (2-sqrt2) N^2, decided exactly on integers via squares.
  out.quad_sweep_ok = true;
  const long long N2 = 1ll * N * N;
  auto ab_feasible = [&](long long ij) {
    // 16 ij - 2 N^2 >= -sqrt2 N^2  <=>  sqrt2 N^2 >= 2 N^2 - 16 ij,
    // decided by comparing squares
    long long rhs = 2 * N2 - 16 * ij;
    if (rhs <= 0) return true;
    return static_cast<__int128>(2) * N2 * N2 >=
           static_cast<__int128>(rhs) * rhs;
  };
  for (long i = 0; i <= N && out.quad_sweep_ok; ++i)
    for (long j = 0; i + j <= N && out.quad_sweep_ok; ++j) {
      if (!ab_feasible(1ll * i * j)) continue;
      for (long k = 0; i + j + k <= N - 1; ++k) {  // l >= 1 keeps d >= 1/N
        long l = N - i - j - k;
        long long scaled = 2ll * i * j + 2ll * j * k + 2ll * k * l + 1ll * l * l;
        if (2 * scaled >= N2) {
          out.quad_sweep_ok = false;
          break;
        }
      }
    }

  return out;
}

}  // namespace flagcert
