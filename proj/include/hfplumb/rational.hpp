#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace hfplumb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders canonically: "0", "3", "-1/2" (always reduced, sign on the numerator).
std::string to_string(const Rational& r);

// Accepts "p", "p/q", optional leading sign, optional surrounding whitespace.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

// r - s is an even integer (the U-step between two gradings).
bool even_difference(const Rational& r, const Rational& s);

long long to_long(const BigInt& v);

}  // namespace hfplumb
