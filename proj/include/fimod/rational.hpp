#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fimod {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace fimod
