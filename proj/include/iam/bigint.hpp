#pragma once

// Exact scalar types shared by every counting routine.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace iam {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient with the convention C(x, r) = 0 for r < 0,
/// C(x, 0) = 1, and 0 whenever x < r for x >= 0 or x < 0 with r > 0.
BigInt binomial(std::int64_t x, std::int64_t r);

/// n! for n >= 0; throws std::domain_error on negative input.
BigInt factorial(std::int64_t n);

std::string to_string(const BigInt& value);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

/// Parses "p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);

/// Exact integer power of a rational; negative exponents invert.
Rational pow(const Rational& base, std::int64_t exponent);

}  // namespace iam
