#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tmh {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds the canonical rational p/q. Throws DomainError if q == 0.
Rational make_rational(const Integer& p, const Integer& q);

/// Parses "p/q", "p", or a finite decimal "-12.345" into an exact rational.
/// Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

/// Exact decimal expansion when the reduced denominator has the form 2^a 5^b;
/// otherwise falls back to "p/q".
std::string to_exact_decimal(const Rational& value);

/// n! as a big integer.
Integer factorial(unsigned long n);

/// 2^e as a big integer.
Integer pow2(unsigned long e);

/// Number of 1 bits of n.
inline int popcount(std::uint64_t n) { return __builtin_popcountll(n); }

}  // namespace tmh
