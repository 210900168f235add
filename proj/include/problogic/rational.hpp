#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace problogic {

/// Exact arbitrary-precision rational. All probabilities, masses, and
/// linear-program entries in this library are of this type; nothing is
/// ever rounded.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "a/b", plain integers, and decimal literals ("0.25", "-3.5")
/// into an exact rational. Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical form: "a/b", or just "a" when the denominator is 1.
std::string rational_to_string(const Rational& r);

/// Rounded decimal rendering for human-facing output. Never used where
/// exactness matters.
std::string rational_to_decimal(const Rational& r, int digits = 6);

inline bool in_unit_interval(const Rational& r) { return r >= 0 && r <= 1; }

}  // namespace problogic
