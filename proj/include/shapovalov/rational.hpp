#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace shapovalov {

/// Exact rational number. Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace shapovalov
