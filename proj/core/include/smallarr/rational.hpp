#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace smallarr {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept reduced with positive denominator by
/// the backing type. All arithmetic in this project is exact.
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p", "-p" or "p/q" (q > 0 after normalization). Throws input_error.
Rational parse_rational(const std::string& text);

/// Render as "p" when integral, "p/q" otherwise.
std::string rational_to_string(const Rational& q);

}  // namespace smallarr
