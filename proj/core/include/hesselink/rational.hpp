#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hesselink {

// All core arithmetic is exact. Floating point appears only in display code.
using Rational = mpq_class;
using Integer = mpz_class;

using RatVec = std::vector<Rational>;

// Builds a canonical rational from an integer pair (den > 0 after
// canonicalization; throws std::invalid_argument on zero denominator).
Rational make_rational(const Integer& num, const Integer& den);

// Parses "p", "p/q", or "-p/q" (ASCII, base 10). Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Serializes as "p/q" with q >= 1, always including the denominator, so the
// JSON schema stays uniform ("12/1", "-3/14").
std::string fraction_string(const Rational& q);

// "p/q (~ 0.214286)" style decimal hint for human-readable output.
std::string approx_string(const Rational& q);

Rational dot(const RatVec& a, const RatVec& b);
Rational norm_squared(const RatVec& a);
bool is_zero_vec(const RatVec& a);

Integer binomial(long n, long k);  // 0 for k < 0 or k > n

}  // namespace hesselink
