#ifndef FLAGCERT_TEST_UTIL_HPP
#define FLAGCERT_TEST_UTIL_HPP

#include <cmath>
#include <random>
#include <vector>

#include "flagcert/colored_graph.hpp"
#include "flagcert/matrix.hpp"
#include "flagcert/pattern.hpp"

namespace flagcert::testutil {

inline ColoredGraph random_colored_graph(std::mt19937& rng, int n) {
  ColoredGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      g.set_color(u, v, static_cast<EdgeColor>(rng() % 3));
  return g;
}

inline ColoredGraph random_family_free(std::mt19937& rng, int n,
                                       const ForbiddenFamily* family) {
  while (true) {
    ColoredGraph g = random_colored_graph(rng, n);
    if (is_family_free(g, family)) return g;
  }
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
  return perm;
}

inline Rational random_small_rational(std::mt19937& rng, long num_range = 10,
                                      long den_range = 6) {
  long num = static_cast<long>(rng() % (2 * num_range + 1)) - num_range;
  long den = 1 + static_cast<long>(rng() % den_range);
  return make_rational(num, den);
}

inline QSqrt2 random_qsqrt2(std::mt19937& rng) {
  return QSqrt2(random_small_rational(rng), random_small_rational(rng));
}

// cyclic Jacobi; good enough as a floating oracle at small dimensions
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i][i];
  return eig;
}

inline std::vector<double> eigenvalues_of(const SymMatrixQ& m) {
  std::vector<std::vector<double>> a(m.dim(), std::vector<double>(m.dim()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) a[i][j] = m.at(i, j).to_double();
  return jacobi_eigenvalues(std::move(a));
}

}  // namespace flagcert::testutil

#endif
