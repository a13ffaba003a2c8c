#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricreg {

/// Arbitrary-precision integer used by every linear-algebra routine.
using Integer = boost::multiprecision::cpp_int;
/// Exact rational; always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Lattice coordinate. Point enumeration works on 64-bit coordinates and
/// refuses (with OverflowError) any scan whose intermediate values could leave
/// the range, so results are exact or absent, never wrapped.
using Coord = std::int64_t;
using Point = std::vector<Coord>;

Coord to_coord(const Integer& value);
Integer to_integer(Coord value);
std::vector<Integer> to_integers(const Point& p);
Point to_point(const std::vector<Integer>& v);

Point add(const Point& a, const Point& b);
Point subtract(const Point& a, const Point& b);
Point scale(const Point& a, Coord c);
Coord dot(const Point& a, const Point& b);

}  // namespace toricreg
