#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace dmod {

// Exact rationals. mpq_class keeps values canonical (positive denominator,
// reduced) as long as every constructor path calls canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Parses "a" or "a/b" with an optional leading sign.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Bit size of numerator plus denominator, used as a cost measure.
std::size_t bit_size(const Rational& q);

}  // namespace dmod
