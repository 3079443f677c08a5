#ifndef FLAGCERT_QSQRT2_HPP
#define FLAGCERT_QSQRT2_HPP

#include <iosfwd>
#include <string>

#include "flagcert/rational.hpp"

namespace flagcert {

// Element p + q*sqrt(2) of the real quadratic field Q[sqrt(2)].
// Equality is componentwise; the total order of the reals is decided exactly.
struct QSqrt2 {
  Rational p;
  Rational q;

  QSqrt2() : p(0), q(0) {}
  QSqrt2(const Rational& rational_part) : p(rational_part), q(0) {}
  QSqrt2(long value) : p(value), q(0) {}
  QSqrt2(const Rational& rational_part, const Rational& sqrt2_part)
      : p(rational_part), q(sqrt2_part) {}

  static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }

  bool is_zero() const { return p == 0 && q == 0; }
  bool is_rational() const { return q == 0; }

  QSqrt2 operator-() const { return QSqrt2(-p, -q); }
  QSqrt2& operator+=(const QSqrt2& o);
  QSqrt2& operator-=(const QSqrt2& o);
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o);

  // sign of p + q*sqrt(2) as a real number: -1, 0 or +1
  int sign() const;

  double to_double() const;
};

QSqrt2 operator+(QSqrt2 a, const QSqrt2& b);
QSqrt2 operator-(QSqrt2 a, const QSqrt2& b);
QSqrt2 operator*(QSqrt2 a, const QSqrt2& b);
QSqrt2 operator/(QSqrt2 a, const QSqrt2& b);

inline bool operator==(const QSqrt2& a, const QSqrt2& b) {
  return a.p == b.p && a.q == b.q;
}
inline bool operator!=(const QSqrt2& a, const QSqrt2& b) { return !(a == b); }
bool operator<(const QSqrt2& a, const QSqrt2& b);
inline bool operator>(const QSqrt2& a, const QSqrt2& b) { return b < a; }
inline bool operator<=(const QSqrt2& a, const QSqrt2& b) { return !(b < a); }
inline bool operator>=(const QSqrt2& a, const QSqrt2& b) { return !(a < b); }

// Literal grammar shared by all file formats:
//   a/b   a/b+c/d*r2   a/b-c/d*r2      (no whitespace)
QSqrt2 parse_qsqrt2(const std::string& text);
std::string format_qsqrt2(const QSqrt2& value);

std::ostream& operator<<(std::ostream& os, const QSqrt2& value);

}  // namespace flagcert

#endif
