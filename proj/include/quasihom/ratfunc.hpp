#pragma once

#include <string>
#include <vector>

#include "quasihom/poly.hpp"

namespace quasihom {

/// Quotient of polynomials in lowest terms with a monic denominator
/// (leading graded-lex coefficient 1), so equal functions compare equal.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error on a zero denominator.
  RatFunc(Poly num, Poly den);

  /// num / (product of den_factors) in lowest terms. Cheaper than the
  /// two-argument constructor when the factors are small.
  static RatFunc from_factored(Poly num, const std::vector<Poly>& den_factors);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Degree-zero in every coordinate.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value of a constant function. Precondition: is_constant().
  Rational constant() const { return num_.constant(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc operator-() const;

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative(Coord c) const;

  /// Throws std::domain_error when the denominator vanishes at p.
  Rational evaluate(const Point& p) const;
  double evaluate(const PointD& p) const;

  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

RatFunc operator/(const RatFunc& a, const RatFunc& b);

}  // namespace quasihom
