#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "quasihom/poly.hpp"

namespace quasihom {

/// Rate vector (lx, lh, lz) of a factor exp(lx*x + lh*h + lz*z).
using Rate = std::array<Rational, 3>;

struct RateLess {
  bool operator()(const Rate& a, const Rate& b) const {
    for (int i = 0; i < 3; ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

inline Rate zero_rate() { return {Rational(0), Rational(0), Rational(0)}; }
inline bool is_zero_rate(const Rate& r) { return sgn(r[0]) == 0 && sgn(r[1]) == 0 && sgn(r[2]) == 0; }

/// Parses "lx,lh,lz" (three rationals). Throws std::invalid_argument.
Rate parse_rate(const std::string& text);
std::string to_string(const Rate& r);

/// Finite sum of exp(rate . (x,h,z)) * Poly with distinct rates. Summands with
/// a zero polynomial are never stored; the zero rate carries plain polynomials.
class ExpPoly {
 public:
  using SummandMap = std::map<Rate, Poly, RateLess>;

  ExpPoly() = default;
  ExpPoly(const Poly& p);  // NOLINT(google-explicit-constructor)
  ExpPoly(const Rational& c) : ExpPoly(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  ExpPoly(long c) : ExpPoly(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  ExpPoly(const Rate& rate, const Poly& p);

  const SummandMap& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }
  /// True when only the zero rate occurs.
  bool is_polynomial() const;
  /// The zero-rate part.
  Poly polynomial_part() const;
  Poly part(const Rate& r) const;

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  ExpPoly& operator*=(const Rational& c);
  ExpPoly operator-() const;

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(ExpPoly a, const Rational& c) { return a *= c; }
  friend ExpPoly operator*(const Rational& c, ExpPoly a) { return a *= c; }
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.summands_ == b.summands_; }
  friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

  ExpPoly derivative(Coord c) const;

  /// Exact value when every exponent rate . p vanishes; empty otherwise.
  std::optional<Rational> evaluate_exact(const Point& p) const;
  double evaluate(const PointD& p) const;

  std::string to_string() const;

 private:
  void add(const Rate& r, const Poly& p);
  SummandMap summands_;
};

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);

}  // namespace quasihom
