#include <random>

#include "doctest.h"
#include "quasihom/exppoly.hpp"
#include "quasihom/linalg.hpp"
#include "quasihom/parse.hpp"
#include "quasihom/ratfunc.hpp"

using namespace quasihom;

namespace {

const Poly X = Poly::var(Coord::x);
const Poly H = Poly::var(Coord::h);
const Poly Z = Poly::var(Coord::z);

Poly random_poly(std::mt19937& rng, int max_deg = 3, int max_terms = 4) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  Poly p;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exponent e{static_cast<std::uint16_t>(deg(rng)), static_cast<std::uint16_t>(deg(rng)),
               static_cast<std::uint16_t>(deg(rng))};
    p.add_term(e, make_rational(coef(rng), den(rng)));
  }
  return p;
}

ExpPoly random_exppoly(std::mt19937& rng) {
  static const std::vector<Rate> rates{zero_rate(), {Rational(-2), Rational(0), Rational(0)},
                                       {Rational(0), make_rational(1, 2), Rational(0)}};
  ExpPoly e;
  for (const auto& r : rates) {
    if (rng() % 2) e += ExpPoly(r, random_poly(rng, 2, 3));
  }
  return e;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  Rational root;
  CHECK(rational_sqrt(make_rational(9, 4), root));
  CHECK(root == make_rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2), root));
}

TEST_CASE("parse_expr substitutes parameters exactly") {
  CHECK(parse_expr("C*z^2", {{"C", make_rational(3, 2)}}) == make_rational(3, 2) * Z * Z);
  CHECK(parse_expr("x + x - x") == X);
  CHECK(parse_expr("(D/2)*z*(D/2)*z", {{"D", Rational(2)}}) == Z * Z);
  CHECK(parse_expr("-(h - 1)^2") == -(H - Poly(1)) * (H - Poly(1)));
  CHECK(parse_expr("  3/2 * z ^ 2 ") == make_rational(3, 2) * Z * Z);
}

TEST_CASE("parse_expr errors report positions") {
  try {
    parse_expr("x + * h");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_expr("q*x"), ParseError);
  CHECK_THROWS_AS(parse_expr("x^-1"), ParseError);
  CHECK_THROWS_AS(parse_expr("x^1/2"), ParseError);  // ambiguous, rejected
  CHECK_THROWS_AS(parse_expr("x^2.5"), ParseError);
  CHECK_THROWS_AS(parse_expr("x/h"), ParseError);
  CHECK_THROWS_AS(parse_expr("(x + h"), ParseError);
}

TEST_CASE("printer round-trips through the parser") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Poly p = random_poly(rng);
    CHECK(parse_expr(p.to_string()) == p);
  }
  CHECK((make_rational(3, 2) * Z * Z + H * X - Poly(1)).to_string() == "3/2*z^2 + x*h - 1");
}

TEST_CASE("ring axioms hold exactly") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const ExpPoly a = random_exppoly(rng), b = random_exppoly(rng), c = random_exppoly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == ExpPoly());
  }
}

TEST_CASE("differentiate") {
  CHECK(ExpPoly(Z * Z).derivative(Coord::z) == ExpPoly(Poly(2) * Z));
  const Rate r{Rational(-2), Rational(0), Rational(0)};
  CHECK(ExpPoly(r, Poly(1)).derivative(Coord::x) == ExpPoly(r, Poly(-2)));
  CHECK(ExpPoly(Rational(7)).derivative(Coord::h).is_zero());
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const ExpPoly p = random_exppoly(rng);
    CHECK(p.derivative(Coord::x).derivative(Coord::h) == p.derivative(Coord::h).derivative(Coord::x));
    CHECK(p.derivative(Coord::z).derivative(Coord::x) == p.derivative(Coord::x).derivative(Coord::z));
  }
}

TEST_CASE("ExpPoly evaluation") {
  const Rate r{Rational(-1), Rational(0), Rational(0)};
  const ExpPoly e(r, Z + Poly(1));
  CHECK(e.evaluate_exact({Rational(0), Rational(5), Rational(2)}) == Rational(3));
  CHECK_FALSE(e.evaluate_exact({Rational(1), Rational(0), Rational(0)}).has_value());
  CHECK(e.evaluate(PointD{1.0, 0.0, 0.0}) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("polynomial gcd and rational function normalization") {
  const Poly a = (X + H) * (Z * Z - Poly(2) * H);
  const Poly b = (X + H) * (X - Z);
  CHECK(gcd(a, b) == X + H);
  CHECK(gcd(a * a, a * (H + Poly(3))) == monic(a));
  CHECK(gcd(X * X - Poly(1), X - Poly(1)) == X - Poly(1));
  CHECK(gcd(Poly(6), Poly(4)) == Poly(1));

  const RatFunc f(a, b);
  CHECK(f.num() == exact_divide(Z * Z - Poly(2) * H, Poly(1)) * Rational(-1));
  CHECK(f == RatFunc(Poly(2) * a, Poly(2) * b));
  CHECK((f - f).is_zero());
  CHECK(RatFunc(Poly(3), Poly(6)) == RatFunc(make_rational(1, 2)));

  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    const Poly p = random_poly(rng, 2, 3), q = random_poly(rng, 2, 3), s = random_poly(rng, 2, 3);
    if (q.is_zero() || s.is_zero()) continue;
    const RatFunc u(p, q), v(s, q + Poly(1));
    CHECK((u + v) - v == u);
    CHECK((u * v) / v == u);
    // quotient rule against the product rule on u * q = p
    CHECK(u.derivative(Coord::h) * RatFunc(q) + u * RatFunc(q.derivative(Coord::h)) ==
          RatFunc(p.derivative(Coord::h)));
  }
}

TEST_CASE("nullspace") {
  CHECK(nullspace(Matrix::identity(3)).empty());
  CHECK(nullspace(Matrix(2, 3)).size() == 3);
  const Matrix row{{Rational(1), Rational(-1), Rational(0)}};
  const auto basis = nullspace(row);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) CHECK((row * v) == RVector{Rational(0)});

  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = make_rational(d(rng), 1 + (rng() % 3));
    }
    if (r > 2) {  // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(1, j);
    }
    const auto ns = nullspace(m);
    for (const auto& v : ns) CHECK((m * v) == RVector(r));
    CHECK(rank(m) + ns.size() == c);
  }
}

TEST_CASE("determinant, inverse, solve") {
  const Matrix m{{Rational(2), Rational(1), Rational(0)},
                 {Rational(1), Rational(3), Rational(1)},
                 {Rational(0), Rational(1), Rational(4)}};
  CHECK(determinant(m) == Rational(18));
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(*inv * m == Matrix::identity(3));
  CHECK_FALSE(inverse(Matrix(2, 2)).has_value());
  auto x = solve(m, {Rational(1), Rational(2), Rational(3)});
  REQUIRE(x.has_value());
  CHECK(m * *x == RVector{Rational(1), Rational(2), Rational(3)});
  CHECK_FALSE(solve(Matrix(1, 1), {Rational(1)}).has_value());
}

TEST_CASE("signature by congruence") {
  const Matrix diag{{Rational(1), Rational(0), Rational(0)},
                    {Rational(0), Rational(1), Rational(0)},
                    {Rational(0), Rational(0), Rational(-1)}};
  CHECK(signature(diag) == Signature{2, 1, 0});
  const Matrix family{{Rational(1), Rational(0), Rational(0)},
                      {Rational(0), Rational(0), make_rational(1, 2)},
                      {Rational(0), make_rational(1, 2), Rational(0)}};
  CHECK(signature(family) == Signature{2, 1, 0});
  const auto cd = congruence_diagonalize(family);
  Matrix d(3, 3);
  for (int i = 0; i < 3; ++i) d(i, i) = cd.diagonal[i];
  CHECK(cd.basis.transpose() * family * cd.basis == d);
}
