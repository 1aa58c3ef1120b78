#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quasihom/rational.hpp"

namespace quasihom {

/// Degrees in (x, h, z).
using Exponent = std::array<std::uint16_t, 3>;

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

/// Graded-lex order: total degree first, ties broken by z, then h, then x.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    if (a[2] != b[2]) return a[2] < b[2];
    if (a[1] != b[1]) return a[1] < b[1];
    return a[0] < b[0];
  }
};

/// All exponents of total degree <= max_degree, ascending in graded-lex order.
std::vector<Exponent> monomials_up_to(int max_degree);

/// Sparse polynomial in (x, h, z) over the rationals. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
class Poly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLex>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly var(Coord c);
  static Poly monomial(const Exponent& e, const Rational& c = Rational(1));

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant() const;
  Rational coefficient(const Exponent& e) const;

  /// -1 for the zero polynomial.
  int degree() const;
  int degree_in(Coord c) const;
  bool depends_on(Coord c) const { return degree_in(c) > 0; }

  /// Largest term in graded-lex order. Precondition: nonzero.
  const std::pair<const Exponent, Rational>& leading_term() const { return *terms_.rbegin(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned n) const;
  Poly derivative(Coord c) const;

  Rational evaluate(const Point& p) const;
  double evaluate(const PointD& p) const;

  /// Adds c * monomial(e) in place.
  void add_term(const Exponent& e, const Rational& c);

  /// Canonical text, terms in descending graded-lex order, e.g. "3/2*z^2 + h*x - 1".
  std::string to_string() const;

 private:
  TermMap terms_;
};

Poly operator*(const Poly& a, const Poly& b);

/// Exact quotient a / b. Throws std::domain_error if b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);

/// Greatest common divisor over Q, normalized to a monic leading term
/// (graded-lex). gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Content-free part: divides by the leading coefficient so the result is monic.
Poly monic(const Poly& p);

}  // namespace quasihom
