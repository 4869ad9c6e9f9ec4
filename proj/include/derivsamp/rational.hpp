#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace derivsamp {

/// Exact rational; GMP keeps it canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q", "p" or a terminating decimal such as "0.5".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

BigInt binomial(long n, long k);
BigInt factorial(long n);

/// Exact integer power; exponent must be non-negative.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace derivsamp
