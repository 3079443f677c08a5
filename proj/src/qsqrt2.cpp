#include "flagcert/qsqrt2.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace flagcert {

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
  p += o.p;
  q += o.q;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
  p -= o.p;
  q -= o.q;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  // (p + q r)(p' + q' r) = pp' + 2qq' + (pq' + qp') r
  Rational np = p * o.p + 2 * q * o.q;
  Rational nq = p * o.q + q * o.p;
  p = np;
  q = nq;
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q[sqrt2]");
  // 1/(p + q r) = (p - q r) / (p^2 - 2 q^2); the norm is nonzero since
  // sqrt(2) is irrational.
  Rational norm = o.p * o.p - 2 * o.q * o.q;
  QSqrt2 inv(o.p / norm, -o.q / norm);
  return *this *= inv;
}

QSqrt2 operator+(QSqrt2 a, const QSqrt2& b) { return a += b; }
QSqrt2 operator-(QSqrt2 a, const QSqrt2& b) { return a -= b; }
QSqrt2 operator*(QSqrt2 a, const QSqrt2& b) { return a *= b; }
QSqrt2 operator/(QSqrt2 a, const QSqrt2& b) { return a /= b; }

int QSqrt2::sign() const {
  int sp = sgn(p), sq = sgn(q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: the value is positive iff the term with the larger
  // square wins, since |p| vs |q|sqrt(2) compares as p^2 vs 2q^2.
  Rational diff = p * p - 2 * q * q;
  int cmp = sgn(diff);
  return cmp == 0 ? 0 : (cmp > 0 ? sp : sq);
}

bool operator<(const QSqrt2& a, const QSqrt2& b) {
  return (a - b).sign() < 0;
}

double QSqrt2::to_double() const {
  return p.get_d() + q.get_d() * std::sqrt(2.0);
}

QSqrt2 parse_qsqrt2(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number literal");
  const std::string suffix = "*r2";
  if (text.size() >= suffix.size() &&
      text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0) {
    std::string body = text.substr(0, text.size() - suffix.size());
    // split at the last sign that is not the leading one
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
      if (body[i] == '+' || body[i] == '-') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos)
      throw std::invalid_argument("bad Q[sqrt2] literal: " + text);
    Rational p = parse_rational(body.substr(0, split));
    Rational q = parse_rational(body.substr(split + 1));
    if (body[split] == '-') q = -q;
    return QSqrt2(p, q);
  }
  return QSqrt2(parse_rational(text));
}

std::string format_qsqrt2(const QSqrt2& value) {
  if (value.q == 0) return format_rational(value.p);
  std::string out = format_rational(value.p);
  if (value.q > 0) {
    out += "+" + format_rational(value.q) + "*r2";
  } else {
    Rational neg = -value.q;
    out += "-" + format_rational(neg) + "*r2";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& value) {
  return os << format_qsqrt2(value);
}

}  // namespace flagcert
