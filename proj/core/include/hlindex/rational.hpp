#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hl {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or a finite decimal such as "0.91". Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" for integers.
std::string to_string(const Rational& r);

}  // namespace hl
