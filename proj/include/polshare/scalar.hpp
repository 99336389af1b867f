#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polshare {

/// Arbitrary-precision integer, used for multiplicities and dimensions.
using BigInt = mpz_class;

/// Exact rational in lowest terms with a positive denominator. Every
/// eigenvalue, bias and overlap in the library is one of these.
using Rational = mpq_class;

/// num/den reduced to lowest terms. Use this instead of the two-argument
/// mpq_class constructor, which does not canonicalize.
Rational ratio(const BigInt& num, const BigInt& den);

/// 2^e as an exact integer.
BigInt pow2(unsigned long e);

/// C(n, j).
BigInt binomial(unsigned long n, unsigned long j);

/// x^e for a rational base.
Rational pow(const Rational& x, unsigned long e);

/// Parses "3/8", "-2", "0.032", "1e-5", "2.5E+3" into an exact rational.
/// Decimal inputs are taken at face value ("0.1" is exactly 1/10).
/// Throws DomainError on malformed text.
Rational parse_exact(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_exact_string(const Rational& x);

/// Decimal rendering with `digits` significant digits, trailing zeros
/// stripped (printf %g style). Rounded to nearest.
std::string to_decimal_string(const Rational& x, int digits = 15);

}  // namespace polshare
