#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <map>
#include <string>
#include <string_view>

namespace liemod {

namespace bmp = boost::multiprecision;

/// Arbitrary-precision integer. Expression templates are off so the type
/// behaves like a plain value inside Eigen expressions and std containers.
using Integer = bmp::number<bmp::gmp_int, bmp::et_off>;

/// Arbitrary-precision rational, always kept in lowest terms by GMP.
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

/// A (partial) assignment of rational values to named parameters.
using Assignment = std::map<std::string, Rational>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Integer& x) { return x.is_zero(); }

std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Parses "3", "-7", "2/5".  Throws Error(SyntaxError) on anything else.
Rational parse_rational(std::string_view text);

/// Parses "p=2,q=-1/3".  An empty string yields an empty assignment.
Assignment parse_assignment(std::string_view text);

std::string to_string(const Assignment& a);

} // namespace liemod
