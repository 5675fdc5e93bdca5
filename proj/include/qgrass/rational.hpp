#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qgrass
{

// Exact scalar field. GMP keeps mpq_class canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on bad input or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den", e.g. "2/1", "-1/4".
std::string to_string(const Rational &value);

/// "num" when the denominator is one, otherwise "num/den".
std::string to_short_string(const Rational &value);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

/// value^e for any integer e; e < 0 requires value != 0.
Rational pow(const Rational &value, long e);

inline int sign_of_parity(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace qgrass
