#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace semiform
{

// Arbitrary-precision integers and canonical (reduced, positive denominator)
// fractions. mpq_class keeps values canonical after every arithmetic op.
using Integer = mpz_class;
using Rational = mpq_class;

// "num/den", always with an explicit denominator ("3/1", "0/1").
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

// Accepts "num/den" or a bare integer; throws std::invalid_argument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Integer factorial(unsigned i);
Integer binomial(unsigned n, unsigned k);

} // namespace semiform
