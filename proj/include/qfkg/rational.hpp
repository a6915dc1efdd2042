#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qfkg {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical "numerator/denominator" form; integers keep the "/1".
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Accepts "a", "-a", "a/b". Throws InputError on malformed text or a zero
/// denominator.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);
BigInt factorial_int(unsigned n);

/// Integer power with a signed exponent; base must be nonzero when exp < 0.
Rational pow(const Rational& base, long exp);

}  // namespace qfkg
