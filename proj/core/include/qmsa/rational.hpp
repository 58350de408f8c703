#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace qmsa {

// Exact rational arithmetic with arbitrary-precision integers. All identity
// checks in this project reduce to exact zero; there is no floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "n" or "n/d" with an optional leading sign. Returns nullopt on
// malformed input or zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace qmsa
