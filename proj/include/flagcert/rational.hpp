#ifndef FLAGCERT_RATIONAL_HPP
#define FLAGCERT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace flagcert {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Strict literal form "a/b" with arbitrary-precision integers; a bare integer
// "a" is accepted as a/1.
Rational parse_rational(const std::string& text);

// Always prints an explicit denominator, e.g. "3/1", "-5/4".
std::string format_rational(const Rational& value);

// Closest rational with denominator <= max_denominator, via continued
// fractions (convergents plus the best semiconvergent).
Rational approximate_with_bounded_denominator(const Rational& value,
                                              unsigned long max_denominator);

}  // namespace flagcert

#endif
