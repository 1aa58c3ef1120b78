#include <complex>
#include <random>

#include "doctest.h"
#include "quasihom/curvature.hpp"
#include "support/numeric_oracle.hpp"
#include "support/test_util.hpp"

using namespace quasihom;
using testutil::family_metric;

namespace {

Metric perturbed_flat() {
  // g_{0,0} + z^3 dh^2
  return Metric::from_upper(1, 0, 0, parse_expr("z^3", {}), 1, 0, {0, 0, 0});
}

// Non-constant determinant, so every inverse-metric path is a genuine fraction.
Metric curved_general() {
  auto p = [](const char* s) { return parse_expr(s, {}); };
  return Metric::from_upper(p("1 + h^2"), p("z/2"), p("0"), p("1 + x"), p("0"), p("-1"), {0, 0, 0});
}

std::vector<double> flatten(const oracle::D3& t) {
  std::vector<double> out;
  for (const auto& a : t)
    for (const auto& b : a)
      for (double v : b) out.push_back(v);
  return out;
}

std::vector<double> flatten(const oracle::D4& t) {
  std::vector<double> out;
  for (const auto& a : t) {
    auto f = flatten(a);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

void check_against_oracle(const Metric& g, std::mt19937& rng) {
  const Christoffel gm = christoffel(g);
  const RiemannTensor r = riemann(g, gm);
  const RatMatrix ric = ricci_tensor(r);
  for (int trial = 0; trial < 10; ++trial) {
    const Point p = testutil::random_point(rng);
    const PointD pd = to_double(p);
    oracle::D3 sym_gamma{};
    oracle::D4 sym_r{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          sym_gamma[a][b][c] = gm(a, b, c).evaluate(pd);
          for (int d = 0; d < 3; ++d) sym_r[a][b][c][d] = r(a, b, c, d).evaluate(pd);
        }
    std::vector<double> sym_ric, num_ric;
    const DMatrix3 nric = oracle::ricci(oracle::riemann(g, pd));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        sym_ric.push_back(ric[a][b].evaluate(pd));
        num_ric.push_back(nric[a][b]);
      }
    double worst = 0;
    CHECK_MESSAGE(oracle::close(flatten(sym_gamma), flatten(oracle::christoffel(g, pd)), 1e-6, worst), worst);
    CHECK_MESSAGE(oracle::close(flatten(sym_r), flatten(oracle::riemann(g, pd)), 1e-6, worst), worst);
    CHECK_MESSAGE(oracle::close(sym_ric, num_ric, 1e-6, worst), worst);
  }
}

// Roots of l^3 - c1 l^2 + c2 l - c3 by Durand-Kerner iteration.
std::array<std::complex<long double>, 3> cubic_roots(long double c1, long double c2, long double c3) {
  using C = std::complex<long double>;
  auto f = [&](C l) { return ((l - c1) * l + c2) * l - c3; };
  std::array<C, 3> z{C(0.4L, 0.9L), C(-0.65L, 0.72L), C(0.9L, -0.3L)};
  const long double scale = 1 + std::abs(c1) + std::abs(c2) + std::abs(c3);
  for (auto& v : z) v *= scale;
  for (int it = 0; it < 500; ++it) {
    for (int i = 0; i < 3; ++i) {
      C den = 1;
      if (std::abs(f(z[i])) == 0) continue;
      for (int j = 0; j < 3; ++j)
        if (j != i) den *= z[i] - z[j];
      z[i] -= f(z[i]) / den;
    }
  }
  return z;
}

}  // namespace

TEST_CASE("metric constructor validates symmetry, degeneracy and signature") {
  CHECK_THROWS_AS(Metric::from_upper(1, 0, 0, 1, 0, 1, {0, 0, 0}), MetricError);
  CHECK_THROWS_AS(Metric::from_upper(1, 0, 0, 0, 0, -1, {0, 0, 0}), MetricError);
  PolyMatrix asym{{{1, 1, 0}, {0, 1, 0}, {0, 0, -1}}};
  CHECK_THROWS_AS(Metric(asym, {0, 0, 0}), MetricError);
  // Degenerate exactly at the base point.
  CHECK_THROWS_AS(Metric::from_upper(Poly::var(Coord::z), 0, 0, 1, 0, -1, {0, 0, 0}), MetricError);
  CHECK_NOTHROW(Metric::from_upper(Poly::var(Coord::z), 0, 0, 1, 0, -1, {0, 0, 1}));
}

TEST_CASE("signature_at") {
  PolyMatrix lor{{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}};
  CHECK(signature_at(lor, {0, 0, 0}) == Signature{2, 1, 0});
  PolyMatrix fam{{{1, 0, 0}, {0, 0, Rational(1, 2)}, {0, Rational(1, 2), 0}}};
  CHECK(signature_at(fam, {0, 0, 0}) == Signature{2, 1, 0});
  PolyMatrix riem{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  CHECK(signature_at(riem, {0, 0, 0}) == Signature{3, 0, 0});
  PolyMatrix deg{{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}};
  CHECK_THROWS_AS(signature_at(deg, {0, 0, 0}), MetricError);
}

TEST_CASE("family determinant is -1 and Christoffels are polynomial") {
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    const Rational c = testutil::random_rational(rng, 9, 4), d = testutil::random_rational(rng, 9, 4);
    const Metric g = family_metric(c, d);
    CHECK(g.determinant() == Poly(-1));
    const Christoffel gm = christoffel(g);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          CHECK(gm(k, i, j).is_polynomial());
          CHECK(gm(k, i, j) == gm(k, j, i));
        }
  }
  const Christoffel flat = christoffel(family_metric(0, 0));
  for (const auto& a : flat.gamma)
    for (const auto& b : a)
      for (const auto& c : b) CHECK(c.is_zero());
}

TEST_CASE("symbolic curvature agrees with the finite-difference oracle") {
  std::mt19937 rng(2024);
  check_against_oracle(family_metric(0, 0), rng);
  check_against_oracle(family_metric(3, 1), rng);
  check_against_oracle(family_metric(Rational(-5, 3), Rational(1, 2)), rng);
  check_against_oracle(family_metric(1, 0), rng);
  check_against_oracle(perturbed_flat(), rng);
  check_against_oracle(curved_general(), rng);
}

TEST_CASE("Riemann symmetries and Ricci g-symmetry hold exactly") {
  std::vector<Metric> metrics{family_metric(0, 0), family_metric(0, 1), family_metric(1, 1), family_metric(3, 1),
                              family_metric(1, 0), perturbed_flat(), curved_general()};
  for (const auto& g : metrics) {
    const RiemannTensor r = riemann(g);
    CHECK(riemann_symmetry_violations(r).empty());
    CHECK(is_g_symmetric(g, ricci_operator(g, r)));
  }
}

TEST_CASE("covariant derivative") {
  const Metric flat = testutil::minkowski();
  const VectorField dx = VectorField::coordinate(Coord::x);
  CHECK(covariant_derivative(flat, dx, dx).is_zero());
  // A Killing field of constant norm is geodesic.
  for (auto [c, d] : std::vector<std::pair<int, int>>{{0, 0}, {3, 1}, {1, 1}, {-2, 5}}) {
    CHECK(covariant_derivative(family_metric(c, d), dx, dx).is_zero());
  }
  // Metric compatibility X(g(Y,Y)) = 2 g(nabla_X Y, Y).
  auto p = [](const char* s) { return ExpPoly(parse_expr(s, {})); };
  const VectorField x(p("h + z^2"), p("x*z"), p("1 - h"));
  const VectorField y(p("z"), p("x^2 - h"), p("3*h*z"));
  for (const Metric& g : {family_metric(Rational(2, 3), -1), curved_general(), perturbed_flat()}) {
    ExpPoly gyy;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) gyy += ExpPoly(g(i, j)) * y[i] * y[j];
    const FieldFraction nab = covariant_derivative(g, x, y);
    ExpPoly rhs;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rhs += ExpPoly(g(i, j)) * nab.numer[i] * y[j];
    CHECK(ExpPoly(nab.denom) * x.apply(gyy) == rhs * Rational(2));
  }
}

TEST_CASE("Riemann tensor examples") {
  CHECK(riemann(family_metric(0, 0)).is_zero());
  CHECK(riemann(testutil::minkowski()).is_zero());
  const RiemannTensor ads = riemann(family_metric(0, 1));
  CHECK_FALSE(ads.is_zero());
}

TEST_CASE("constant curvature") {
  CHECK(constant_curvature(family_metric(0, 0)) == Rational(0));
  // Derived by hand from one component: k = -D^2/4.
  for (const Rational& d : {Rational(1), Rational(2), Rational(1, 2), Rational(-3)}) {
    const auto k = constant_curvature(family_metric(0, d));
    REQUIRE(k.has_value());
    CHECK(*k == -d * d / 4);
  }
  CHECK_FALSE(constant_curvature(family_metric(1, 0)).has_value());
  CHECK_FALSE(constant_curvature(family_metric(3, 1)).has_value());
  CHECK_FALSE(constant_curvature(perturbed_flat()).has_value());
}

TEST_CASE("Ricci operator") {
  const RicciOperator flat = ricci_operator(family_metric(0, 0));
  for (const auto& row : flat.a)
    for (const auto& v : row) CHECK(v.is_zero());
  // Constant curvature k: A = 2k Id.
  for (const Rational& d : {Rational(1), Rational(3, 2)}) {
    const Metric g = family_metric(0, d);
    const Rational k = *constant_curvature(g);
    const RicciOperator a = ricci_operator(g);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(a(i, j) == RatFunc(i == j ? 2 * k : Rational(0)));
  }
  // D = 0, C != 0: spectrum (0, mu, mu) with mu = C.
  for (const Rational& c : {Rational(1), Rational(-1), Rational(5, 2)}) {
    const CharPoly cp = characteristic_polynomial(ricci_operator(family_metric(c, 0)));
    const Rational mu = c;
    CHECK(cp.c1 == RatFunc(2 * mu));
    CHECK(cp.c2 == RatFunc(mu * mu));
    CHECK(cp.c3.is_zero());
  }
}

TEST_CASE("characteristic polynomial printing") {
  CharPoly cp;
  cp.c1 = RatFunc(Rational(9, 2));
  cp.c2 = RatFunc(Rational(15, 4));
  cp.c3 = RatFunc(Rational(-25, 8));
  CHECK(cp.to_string() == "l^3 - 9/2*l^2 + 15/4*l + 25/8");
  cp.c1 = RatFunc(Rational(2));
  cp.c2 = RatFunc(Rational(1));
  cp.c3 = RatFunc();
  CHECK(cp.to_string() == "l^3 - 2*l^2 + l");
  cp.c1 = RatFunc(parse_expr("6*z", {}));
  cp.c2 = RatFunc(Rational(-1));
  cp.c3 = RatFunc(Rational(1));
  CHECK(cp.to_string() == "l^3 - (6*z)*l^2 - l - 1");
  CHECK(CharPoly{}.to_string() == "l^3");
}

TEST_CASE("scalar invariants") {
  const ScalarInvariants flat = scalar_invariants(family_metric(0, 0));
  CHECK(flat.tr1.is_zero());
  CHECK(flat.tr2.is_zero());
  CHECK(flat.tr3.is_zero());
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) {
    const Metric g = family_metric(testutil::random_rational(rng, 6, 3), testutil::random_rational(rng, 6, 3));
    CHECK(scalar_invariants(g).constant());
  }
  const ScalarInvariants pert = scalar_invariants(perturbed_flat());
  CHECK_FALSE(pert.constant());
  CHECK(pert.tr1 == RatFunc(parse_expr("6*z", {})));
}

TEST_CASE("trace of A two ways") {
  std::mt19937 rng(99);
  for (const Metric& g : {family_metric(3, 1), family_metric(1, 0), curved_general(), perturbed_flat()}) {
    const RiemannTensor r = riemann(g);
    const RatMatrix ric = ricci_tensor(r);
    const RatMatrix inv = g.inverse();
    const RicciOperator a = ricci_operator(g, r);
    const CharPoly cp = characteristic_polynomial(a);
    for (int t = 0; t < 10; ++t) {
      const PointD p = to_double(testutil::random_point(rng));
      double contracted = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) contracted += inv[i][j].evaluate(p) * ric[i][j].evaluate(p);
      const auto roots = cubic_roots(cp.c1.evaluate(p), cp.c2.evaluate(p), cp.c3.evaluate(p));
      const double eig_sum = static_cast<double>((roots[0] + roots[1] + roots[2]).real());
      CHECK(std::abs(contracted - eig_sum) <= 1e-9 * std::max(1.0, std::abs(contracted)));
    }
  }
}
