#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace plstrat {

using Rational = boost::multiprecision::mpq_rational;

/// A point of R^k with exact coordinates.
using Point = std::vector<Rational>;

/// Parses "p/q", "p", or a finite decimal such as "-0.25".
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written without a denominator.
std::string format_rational(const Rational& value);

/// Inner product of equal-length points.
Rational dot(const Point& a, const Point& b);

Point operator-(const Point& a, const Point& b);
Point operator+(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& a);

}  // namespace plstrat
