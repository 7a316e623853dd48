#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wcw {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Accepts "p", "-p" or "p/q" with q != 0. Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string format_rational(const Rational& r);

}  // namespace wcw
