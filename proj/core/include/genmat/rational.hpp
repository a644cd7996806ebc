#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace genmat {

// Exact arithmetic everywhere; this library never rounds.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts an optional sign, digits, and an optional "/digits" part.
// Always canonicalizes, so "4/6" parses as 2/3. Throws ParseError on
// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace genmat
