#include "sumsets/rational.hpp"

#include <cctype>

#include "sumsets/errors.hpp"

namespace sumsets {

namespace {

// Accepts an optionally signed decimal integer, no whitespace.
bool scan_integer(const std::string& text, Int& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') ++pos;
  if (pos == text.size()) return false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  // cpp_int's string constructor accepts a leading '-' but not '+'.
  out = Int(text[0] == '+' ? text.substr(1) : text);
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  Int num;
  Int den = 1;
  if (slash == std::string::npos) {
    if (!scan_integer(text, num)) {
      throw ParseError("not a rational: '" + text + "'");
    }
  } else {
    if (text.find('/', slash + 1) != std::string::npos ||
        !scan_integer(text.substr(0, slash), num) ||
        !scan_integer(text.substr(slash + 1), den)) {
      throw ParseError("not a rational: '" + text + "'");
    }
    if (den == 0) {
      throw ParseError("zero denominator: '" + text + "'");
    }
  }
  // cpp_rational rejects negative denominators at construction.
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_power(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational factor = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= factor;
    factor *= factor;
    e >>= 1u;
  }
  return result;
}

}  // namespace sumsets
