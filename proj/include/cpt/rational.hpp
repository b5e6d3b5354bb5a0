#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cpt {

/// Arbitrary-precision integer.
using BigInt = mpz_class;
/// Canonical arbitrary-precision rational (coprime parts, positive denominator).
using BigRational = mpq_class;

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws ValidationError
/// on malformed text or a zero denominator; the result is canonicalized.
BigRational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRational& value);
std::string to_string(const BigInt& value);

/// Comma-separated list of rationals, e.g. "1,2,-3/4".
std::vector<BigRational> parse_rational_list(std::string_view csv);

}  // namespace cpt
