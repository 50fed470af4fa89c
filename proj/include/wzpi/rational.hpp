#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wzpi {

using BigInt = mpz_class;

/// Exact rational; GMP keeps it canonical (den > 0, gcd(num, den) = 1, zero is 0/1).
using BigRational = mpq_class;

/// Parses "p", "-p" or "p/q" and canonicalizes. Throws DomainError on bad input or q = 0.
BigRational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const BigRational& r);

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

/// floor(r) as a BigInt.
BigInt floor(const BigRational& r);

/// r^e for an integer exponent; r must be nonzero when e < 0.
BigRational pow(const BigRational& r, long e);

/// Integer as long; throws DomainError if it does not fit.
long to_long(const BigInt& z);

}  // namespace wzpi
