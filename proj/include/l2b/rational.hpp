#pragma once

#include <gmpxx.h>

#include <string>

namespace l2b {

using Rational = mpq_class;

// "7" or "-3/4"; denominator omitted when 1.  Used by the CSV exchange
// format so exact values survive a round trip.
std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& s);  // throws on malformed input

}  // namespace l2b
