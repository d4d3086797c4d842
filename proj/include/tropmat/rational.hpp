#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <string>

#include "tropmat/errors.hpp"

namespace tropmat {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", plain integers and decimal strings ("-0.25") exactly.
Rational parse_rational(const std::string& text);

/// Exact value of a finite double (every finite double is a dyadic rational).
Rational rational_from_double(double x);

/// "p/q" when the denominator is nontrivial, plain integer text otherwise.
std::string rational_to_string(const Rational& r);

}  // namespace tropmat
