#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace sumsets {

// Exact arithmetic everywhere: the decoding arguments hinge on exact
// equality of differences, which floating point cannot decide.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" or the integer shorthand "n". Unreduced input is reduced
// silently; a zero denominator is rejected with ParseError.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "n" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& value);

Rational rational_power(const Rational& base, unsigned exponent);

}  // namespace sumsets
