#pragma once

#include <array>
#include <optional>
#include <string>

#include "quasihom/exppoly.hpp"

namespace quasihom {

/// Vector field alpha*d/dx + beta*d/dh + gamma*d/dz with exponential-polynomial
/// coefficients.
class VectorField {
 public:
  VectorField() = default;
  VectorField(ExpPoly alpha, ExpPoly beta, ExpPoly gamma) : c_{std::move(alpha), std::move(beta), std::move(gamma)} {}

  /// The coordinate field d/dc.
  static VectorField coordinate(Coord c);

  const ExpPoly& operator[](int i) const { return c_[i]; }
  ExpPoly& operator[](int i) { return c_[i]; }
  const ExpPoly& operator[](Coord c) const { return c_[static_cast<int>(c)]; }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const Rational& s);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const Rational& s) { return a *= s; }
  friend VectorField operator*(const Rational& s, VectorField a) { return a *= s; }
  friend VectorField operator*(const ExpPoly& f, const VectorField& v);
  VectorField operator-() const { return *this * Rational(-1); }
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.c_ == b.c_; }
  friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

  /// Directional derivative X(f) = sum_i X^i d_i f.
  ExpPoly apply(const ExpPoly& f) const;

  std::optional<std::array<Rational, 3>> evaluate_exact(const Point& p) const;
  std::array<double, 3> evaluate(const PointD& p) const;

  /// Every exponential rate occurring in some component.
  std::vector<Rate> rates() const;

  std::string to_string() const;

 private:
  std::array<ExpPoly, 3> c_;
};

VectorField operator*(const ExpPoly& f, const VectorField& v);

/// Lie bracket [X, Y]^k = X(Y^k) - Y(X^k).
VectorField bracket(const VectorField& x, const VectorField& y);

/// A vector field divided by a common polynomial denominator.
struct FieldFraction {
  VectorField numer;
  Poly denom{1};
  bool is_zero() const { return numer.is_zero(); }
};

/// Flattened coefficient vectors of a list of fields over a shared key set
/// (component, rate, monomial). Used to test linear (in)dependence and to
/// express one field in terms of others.
struct FieldCoordinates {
  std::vector<std::vector<Rational>> columns;  // one column per field
  std::size_t key_count = 0;
};
FieldCoordinates field_coordinates(const std::vector<VectorField>& fields);

/// Coefficients c with target = sum_i c_i fields[i], or empty when target is
/// outside the rational span.
std::optional<std::vector<Rational>> express_in_span(const std::vector<VectorField>& fields,
                                                     const VectorField& target);

/// sum_i coeffs[i] * fields[i].
VectorField combine(const std::vector<VectorField>& fields, const std::vector<Rational>& coeffs);

}  // namespace quasihom
