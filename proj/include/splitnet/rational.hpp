#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace splitnet {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p", "p/q" and plain decimals like "21.5" or "-0.25".
// Throws input_error on anything else (q == 0 included).
Rat parse_rational(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise, always in lowest terms.
std::string format_rational(const Rat& value);

}  // namespace splitnet
