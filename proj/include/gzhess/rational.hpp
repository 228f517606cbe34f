#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gzhess {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q"; canonicalizes the result.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// num/den in lowest terms; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

Integer factorial(unsigned k);
Integer binomial(unsigned n, unsigned k);

}  // namespace gzhess
