#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace reliab {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms with a positive denominator, which every exact-equality test
// in this project relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// x^e for integer e, with 0^0 = 1. Negative exponents require x != 0.
Rational pow_rational(const Rational& x, long e);

// Parses "a", "-a" or "a/b" (b > 0 after normalization). Throws
// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// "a/b", or just "a" when the denominator is 1.
std::string to_string(const Rational& x);

}  // namespace reliab
