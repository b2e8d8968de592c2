#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wrg {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "3", "-2/7", "0.125" or "1e-3" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// num/den in lowest terms; den must be non-zero.
Rational fraction(const Integer& num, const Integer& den);
inline Integer from_u64(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

Rational pow(const Rational& base, long exponent);
Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
/// n (n-1) ... (n-k+1); zero when k > n.
Integer falling_factorial(unsigned long n, unsigned long k);

/// Natural log of a positive rational, accurate for values far outside
/// the double range.
double log_of(const Rational& q);
double log_of(const Integer& z);

inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace wrg
