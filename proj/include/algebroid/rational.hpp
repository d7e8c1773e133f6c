#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace algebroid {

// Exact field of coefficients. mpq_class keeps values canonical (lowest
// terms, positive denominator) as long as every constructor path goes
// through parse_rational or integer construction.
using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;

/// Parses "p", "-p", "p/q" with q unsigned (optional surrounding whitespace). Throws
/// Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& value);

/// Number of bits of |numerator| + |denominator|; the pivot-size measure.
std::size_t bit_size(const Rational& value);
std::size_t bit_size(const Integer& value);

bool is_zero(const RationalVector& v);

}  // namespace algebroid
