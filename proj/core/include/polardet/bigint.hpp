#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace polardet {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" with q > 0. Throws std::invalid_argument on
// anything else (no whitespace, no floats).
Rat parse_rational(const std::string& text);

// Canonical form: lowest terms, "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rat& value);

Int factorial(int n);
Int binomial(int n, int k);

}  // namespace polardet
