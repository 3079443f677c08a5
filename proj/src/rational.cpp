#include "flagcert/rational.hpp"

#include <stdexcept>

namespace flagcert {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto is_integer = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  size_t slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den))
    throw std::invalid_argument("bad rational literal: " + text);
  mpz_class numerator(num), denominator(den);
  if (denominator == 0)
    throw std::invalid_argument("zero denominator in: " + text);
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational approximate_with_bounded_denominator(const Rational& value,
                                              unsigned long max_denominator) {
  if (max_denominator == 0)
    throw std::invalid_argument("denominator bound must be positive");
  mpz_class bound(max_denominator);
  if (value.get_den() <= bound) return value;

  bool negative = value < 0;
  Rational x = negative ? Rational(-value) : value;

  // convergents p/q of the continued fraction of x; seeds are the usual
  // h_{-2}/k_{-2} = 0/1 and h_{-1}/k_{-1} = 1/0
  mpz_class n = x.get_num(), d = x.get_den();
  mpz_class p_prev = 0, q_prev = 1;
  mpz_class p = 1, q = 0;
  while (d != 0) {
    mpz_class a = n / d;
    mpz_class p_next = a * p + p_prev;
    mpz_class q_next = a * q + q_prev;
    if (q_next > bound) {
      // best semiconvergent with denominator within the bound
      mpz_class j = (bound - q_prev) / q;
      Rational semi(j * p + p_prev, j * q + q_prev);
      semi.canonicalize();
      Rational conv(p, q);
      conv.canonicalize();
      Rational best = abs(x - semi) < abs(x - conv) ? semi : conv;
      return negative ? Rational(-best) : best;
    }
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    mpz_class r = n % d;
    n = d;
    d = r;
  }
  Rational exact(p, q);
  exact.canonicalize();
  return negative ? Rational(-exact) : exact;
}

}  // namespace flagcert
