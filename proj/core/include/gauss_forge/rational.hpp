#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gauss_forge {

/// Exact rational number; all combinatorial ordering data lives in this type.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" (decimal). Throws Error(Parse) on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" in lowest terms otherwise.
std::string format_rational(const Rational& value);

/// Exact value of a double (every finite double is a dyadic rational).
Rational exact(double value);

bool is_integer(const Rational& value);

}  // namespace gauss_forge
