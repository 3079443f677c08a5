#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flagcert/matrix.hpp"
#include "flagcert/qsqrt2.hpp"
#include "flagcert/rational.hpp"
#include "test_util.hpp"

using namespace flagcert;
using namespace flagcert::testutil;

TEST_CASE("rational literals") {
  CHECK(format_rational(parse_rational("3/4")) == "3/4");
  CHECK(format_rational(parse_rational("-6/8")) == "-3/4");
  CHECK(format_rational(parse_rational("5")) == "5/1");
  CHECK(format_rational(parse_rational("123456789012345678901234567891/7")) ==
        "123456789012345678901234567891/7");
  CHECK_THROWS(parse_rational(""));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("a/b"));
  CHECK_THROWS(parse_rational("1.5"));
}

TEST_CASE("qsqrt2 literals round-trip") {
  for (const char* text : {"3/4", "-3/4", "0/1", "3/4+1/4*r2", "0/1-2/1*r2",
                           "-1/3-5/7*r2"}) {
    QSqrt2 value = parse_qsqrt2(text);
    CHECK(format_qsqrt2(value) == text);
  }
  CHECK(parse_qsqrt2("1/2+1/2*r2") == QSqrt2(make_rational(1, 2), make_rational(1, 2)));
  CHECK_THROWS(parse_qsqrt2("*r2"));
  CHECK_THROWS(parse_qsqrt2("1/2+*r2"));
}

TEST_CASE("field arithmetic examples") {
  QSqrt2 sqrt2 = QSqrt2::sqrt2();
  CHECK(QSqrt2(1, 1) * QSqrt2(-1, 1) == QSqrt2(1));       // (1+r2)(-1+r2) = 1
  CHECK(QSqrt2(1) / sqrt2 == QSqrt2(Rational(0), make_rational(1, 2)));
  CHECK(QSqrt2(make_rational(3, 4)) + QSqrt2(Rational(0), make_rational(1, 4)) ==
        QSqrt2(make_rational(3, 4), make_rational(1, 4)));
  CHECK_THROWS(QSqrt2(1) / QSqrt2(0));
}

TEST_CASE("sign is exact") {
  CHECK(QSqrt2(Rational(3), Rational(-2)).sign() == 1);   // 9 > 8
  CHECK(QSqrt2(Rational(1), Rational(-1)).sign() == -1);  // 1 < 2
  CHECK(QSqrt2().sign() == 0);
  CHECK(QSqrt2(Rational(-3), Rational(2)).sign() == -1);
  CHECK(QSqrt2(Rational(-1), Rational(1)).sign() == 1);
  CHECK(QSqrt2(make_rational(665857, 470832), Rational(-1)).sign() == 1);
}

TEST_CASE("field axioms on sampled triples") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    QSqrt2 a = random_qsqrt2(rng), b = random_qsqrt2(rng), c = random_qsqrt2(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("order compatibility and floating agreement") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 10000; ++trial) {
    QSqrt2 a = random_qsqrt2(rng);
    CHECK((a * a).sign() >= 0);
    double x = a.to_double();
    if (std::fabs(x) > 1e-9) CHECK(a.sign() == (x > 0 ? 1 : -1));
  }
}

TEST_CASE("psd examples") {
  SUBCASE("identity") {
    PsdVerdict v = psd_check(SymMatrixQ::identity(5));
    CHECK(v.psd);
    CHECK(v.positive_definite);
  }
  SUBCASE("indefinite 2x2 with witness") {
    SymMatrixQ m(2);
    m.set(0, 0, QSqrt2(1));
    m.set(0, 1, QSqrt2(2));
    m.set(1, 1, QSqrt2(1));
    PsdVerdict v = psd_check(m);
    CHECK_FALSE(v.psd);
    REQUIRE(v.witness.size() == 2);
    CHECK(quadratic_value(m, v.witness).sign() < 0);
  }
  SUBCASE("singular psd with sqrt2 entries") {
    SymMatrixQ m(2);
    m.set(0, 0, QSqrt2(2));
    m.set(0, 1, QSqrt2(Rational(0), Rational(-1)));
    m.set(1, 1, QSqrt2(1));
    PsdVerdict v = psd_check(m);
    CHECK(v.psd);
    CHECK_FALSE(v.positive_definite);
    REQUIRE(v.pivots.size() == 1);
    CHECK(v.pivots[0] == QSqrt2(2));
  }
  SUBCASE("zero pivot with nonzero row is indefinite") {
    SymMatrixQ m(3);
    m.set(0, 1, QSqrt2(5));
    PsdVerdict v = psd_check(m);
    CHECK_FALSE(v.psd);
    CHECK(quadratic_value(m, v.witness).sign() < 0);
  }
  SUBCASE("negative diagonal hiding behind zeros") {
    SymMatrixQ m(2);
    m.set(1, 1, QSqrt2(-1));
    PsdVerdict v = psd_check(m);
    CHECK_FALSE(v.psd);
    CHECK(quadratic_value(m, v.witness).sign() < 0);
  }
}

TEST_CASE("factored value") {
  SUBCASE("identity factors") {
    SymMatrixQ m(3);
    MatrixQ id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = QSqrt2(1);
    m.attach_factorization(id, SymMatrixQ::identity(3));
    CHECK(factored_value(m) == SymMatrixQ::identity(3));
  }
  SUBCASE("rank one all-ones") {
    SymMatrixQ m(2);
    MatrixQ col(1, 2);
    col.at(0, 0) = QSqrt2(1);
    col.at(0, 1) = QSqrt2(1);
    m.attach_factorization(col, SymMatrixQ::identity(1));
    SymMatrixQ value = factored_value(m);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(value.at(i, j) == QSqrt2(1));
  }
  SUBCASE("random M^T H M is psd") {
    std::mt19937 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
      MatrixQ m(3, 5);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j)
          m.at(i, j) = QSqrt2(random_small_rational(rng));
      // core = A^T A + I is positive definite
      MatrixQ a(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          a.at(i, j) = QSqrt2(random_small_rational(rng));
      SymMatrixQ core(3);
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
          QSqrt2 s = i == j ? QSqrt2(1) : QSqrt2(0);
          for (int k = 0; k < 3; ++k) s += a.at(k, i) * a.at(k, j);
          core.set(i, j, s);
        }
      REQUIRE(psd_check(core).positive_definite);
      SymMatrixQ shell(5);
      shell.attach_factorization(m, core);
      CHECK(psd_check(factored_value(shell)).psd);
    }
  }
  SUBCASE("missing factorization throws") {
    CHECK_THROWS(factored_value(SymMatrixQ(2)));
  }
}

TEST_CASE("verdict is invariant under symmetric permutation") {
  std::mt19937 rng(45);
  for (int trial = 0; trial < 50; ++trial) {
    int dim = 2 + rng() % 6;
    SymMatrixQ m(dim);
    bool make_psd = trial % 2 == 0;
    if (make_psd) {
      // B^T B
      std::vector<std::vector<QSqrt2>> b(dim, std::vector<QSqrt2>(dim));
      for (auto& row : b)
        for (auto& x : row) x = QSqrt2(random_small_rational(rng));
      for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
          QSqrt2 s;
          for (int k = 0; k < dim; ++k) s += b[k][i] * b[k][j];
          m.set(i, j, s);
        }
    } else {
      for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) m.set(i, j, random_qsqrt2(rng));
    }
    bool verdict = psd_check(m).psd;
    std::vector<int> perm = random_permutation(rng, dim);
    SymMatrixQ permuted(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j)
        permuted.set(i, j, m.at(perm[i], perm[j]));
    CHECK(psd_check(permuted).psd == verdict);
  }
}

TEST_CASE("psd agrees with floating eigenvalues away from zero") {
  std::mt19937 rng(46);
  int tested = 0;
  while (tested < 60) {
    int dim = 2 + rng() % 11;
    SymMatrixQ m(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j)
        m.set(i, j, QSqrt2(random_small_rational(rng),
                           random_small_rational(rng, 3, 4)));
    std::vector<double> eig = eigenvalues_of(m);
    double min_eig = eig[0];
    for (double e : eig) min_eig = std::min(min_eig, e);
    if (std::fabs(min_eig) < 1e-6) continue;
    ++tested;
    PsdVerdict v = psd_check(m);
    CHECK(v.psd == (min_eig > 0));
    if (!v.psd) CHECK(quadratic_value(m, v.witness).sign() < 0);
  }
}

TEST_CASE("bounded-denominator approximation") {
  CHECK(approximate_with_bounded_denominator(make_rational(1, 3), 10) ==
        make_rational(1, 3));
  CHECK(approximate_with_bounded_denominator(Rational(1.0 / 3.0), 1000000) ==
        make_rational(1, 3));
  CHECK(approximate_with_bounded_denominator(Rational(3.14159265358979312), 113) ==
        make_rational(355, 113));
  CHECK(approximate_with_bounded_denominator(Rational(-5.0 / 12.0), 1000) ==
        make_rational(-5, 12));
  std::mt19937 rng(47);
  for (int trial = 0; trial < 500; ++trial) {
    Rational x = random_small_rational(rng, 1000, 999);
    Rational back = approximate_with_bounded_denominator(Rational(x.get_d()), 1000000);
    CHECK(back == x);
  }
}
