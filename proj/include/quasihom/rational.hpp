#pragma once

#include <array>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace quasihom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coordinates on the chart, in the fixed order (x, h, z).
enum class Coord : int { x = 0, h = 1, z = 2 };

inline constexpr std::array<Coord, 3> kCoords{Coord::x, Coord::h, Coord::z};
inline constexpr std::array<const char*, 3> kCoordNames{"x", "h", "z"};

using Point = std::array<Rational, 3>;
using PointD = std::array<double, 3>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is one.
std::string to_string(const Rational& r);

Rational make_rational(long num, long den = 1);

/// Exact square root when r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);

PointD to_double(const Point& p);

}  // namespace quasihom
