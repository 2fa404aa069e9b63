#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace chromagraph {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "num/den", with "/den" omitted for integers: "3", "-1/3".
std::string rational_to_string(const Rational& r);

/// Parses the format produced by rational_to_string.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

}  // namespace chromagraph
