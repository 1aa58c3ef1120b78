#include <random>

#include "doctest.h"
#include "quasihom/cartan.hpp"
#include "quasihom/killing.hpp"
#include "support/test_util.hpp"

using namespace quasihom;
using testutil::family_metric;
using CME = CurvatureModuleElement;

namespace {

ExpPoly ep(const char* s, const ParamMap& pm = {}) { return ExpPoly(parse_expr(s, pm)); }

const VectorField kX = VectorField::coordinate(Coord::x);
const VectorField kH = VectorField::coordinate(Coord::h);
const VectorField kZ = VectorField::coordinate(Coord::z);
const VectorField kY(0, ep("-h"), ep("z"));

VectorField t_scaled(const Rational& c, const Rational& d) {
  ParamMap pm{{"C", c}, {"D", d}};
  return VectorField(ep("D*h", pm), ep("(D^2 - C)/2*h^2", pm), ep("(C - D^2)*z*h - 1", pm));
}

// (e, h, f) -> (d_z, d_x, d_h): adapted for g_{C,D} along z = 0.
Matrix b0() { return Matrix::from_columns({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}); }

const RVector ve{1, 0, 0}, vh{0, 1, 0}, vf{0, 0, 1};

CME random_element(std::mt19937& rng) {
  CME k;
  for (int p = 0; p < 3; ++p)
    for (int g = 0; g < 3; ++g)
      k.coeff(static_cast<CME::Pair>(p), static_cast<CME::Gen>(g)) = testutil::random_rational(rng, 5, 3);
  return k;
}

Matrix random_group_element(std::mt19937& rng) {
  Matrix p = Matrix::identity(3);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int i = 0; i < 4; ++i) {
    const Rational t = testutil::random_rational(rng, 3, 2);
    switch (pick(rng)) {
      case 0: p = p * exp_e(t); break;
      case 1: p = p * exp_f(t); break;
      default: p = p * torus(t == 0 ? Rational(2) : t); break;
    }
  }
  return p;
}

// Exact derivative at t = 0 of a polynomial of degree < n sampled at t = 0..n-1.
template <class F>
CME derivative_at_zero(F value, int n) {
  CME out;
  for (int i = 0; i < n; ++i) {
    // d/dt of the i-th Lagrange basis polynomial at 0.
    Rational w = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Rational term = Rational(1) / (i - j);
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) term *= Rational(-k) / (i - k);
      w += term;
    }
    out += value(Rational(i)) * w;
  }
  return out;
}

}  // namespace

TEST_CASE("o(2,1) coordinates") {
  CHECK(o21_coordinates(gen_e()) == std::array<Rational, 3>{1, 0, 0});
  CHECK(o21_coordinates(gen_h()) == std::array<Rational, 3>{0, 1, 0});
  CHECK(o21_coordinates(gen_f()) == std::array<Rational, 3>{0, 0, 1});
  CHECK(o21_element({2, -1, 3}) == gen_e() * Rational(2) - gen_h() + gen_f() * Rational(3));
  CHECK_THROWS_AS(o21_coordinates(Matrix::identity(3)), std::invalid_argument);
  // Brackets: [H, E] = E, [H, F] = -F, [E, F] = H.
  CHECK(gen_h() * gen_e() - gen_e() * gen_h() == gen_e());
  CHECK(gen_h() * gen_f() - gen_f() * gen_h() == gen_f() * Rational(-1));
  CHECK(gen_e() * gen_f() - gen_f() * gen_e() == gen_h());
}

TEST_CASE("curvature module elements") {
  CHECK(CME::simple(0, 1, gen_e()) == CME::simple(1, 0, gen_e()) * Rational(-1));
  CHECK(CME::simple(1, 1, gen_h()).is_zero());
  // e*^h* evaluates to 1 on (f, h): e*(f) = <e, f> = 1 and h*(h) = 1.
  CHECK(CME::simple(0, 1, gen_e()).evaluate(vf, vh) == gen_e());
  CHECK(CME::simple(0, 1, gen_e()).evaluate(ve, vh).is_zero());
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    const CME k = random_element(rng);
    CHECK(CME::from_values(k.evaluate(vf, vh), k.evaluate(vf, ve), k.evaluate(vh, ve)) == k);
    const RVector u{testutil::random_rational(rng, 4, 3), 1, 2}, v{0, testutil::random_rational(rng, 4, 3), -1};
    CHECK(k.evaluate(u, v) == k.evaluate(v, u) * Rational(-1));
    CHECK(in_o21(k.evaluate(u, v)));
  }
}

TEST_CASE("phi examples and the basis table") {
  CHECK(phi(CME::simple(0, 1, gen_e())) == Matrix{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}});
  CHECK(phi(CME::simple(1, 2, gen_f())) == Matrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
  CHECK(phi(CME()).is_zero());
  const auto rows = verify_table();
  REQUIRE(rows.size() == 6);
  CHECK(table_ok(rows));
  for (const auto& r : rows) {
    INFO(r.name);
    CHECK(r.matches);
    CHECK(r.i_symmetric);
    CHECK(satisfies_bianchi(r.element));
  }
  CHECK(rows[0].value == Matrix::identity(3) * Rational(2));
  CHECK(rows[3].value.trace() == 0);
  CHECK(rows[2].note.empty() == false);
  // The printed m_eh element gives h* (x) e - f* (x) h: not I-symmetric and not in the Bianchi submodule.
  const CME printed = printed_m_eh_element();
  CHECK(phi(printed) == Matrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  CHECK_FALSE(is_i_symmetric(phi(printed)));
  CHECK_FALSE(satisfies_bianchi(printed));
}

TEST_CASE("phi on the Bianchi submodule lands in I-symmetric endomorphisms") {
  // The six table elements span the Bianchi submodule; random combinations stay I-symmetric.
  const auto rows = verify_table();
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    CME k;
    for (const auto& r : rows) k += r.element * testutil::random_rational(rng, 5, 4);
    CHECK(satisfies_bianchi(k));
    CHECK(is_i_symmetric(phi(k)));
  }
}

TEST_CASE("group and Lie algebra actions") {
  const CME w = CME::simple(0, 1, gen_e());
  CHECK(act(exp_e(0), w) == w);
  CHECK(act(Matrix::identity(3), w) == w);
  CHECK(in_o21_group(exp_e(Rational(3, 2))));
  CHECK(in_o21_group(exp_f(-2)));
  CHECK(in_o21_group(torus(5)));
  CHECK_THROWS_AS(act(Matrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}, w), std::invalid_argument);
  CHECK_THROWS_AS(torus(0), std::invalid_argument);
  // e*^h* (x) E has H-weight 2: e* and E have weight 1, h* weight 0.
  CHECK(act_infinitesimal(gen_h(), w) == w * Rational(2));
  CHECK(act(torus(3), w) == w * Rational(9));
  std::mt19937 rng(21);
  for (int t = 0; t < 10; ++t) {
    const CME k = random_element(rng);
    // Derivative of the polynomial curve t -> exp(tX) . k at 0 (degree <= 8).
    CHECK(derivative_at_zero([&](const Rational& s) { return act(exp_e(s), k); }, 9) ==
          act_infinitesimal(gen_e(), k));
    CHECK(derivative_at_zero([&](const Rational& s) { return act(exp_f(s), k); }, 9) ==
          act_infinitesimal(gen_f(), k));
    const Matrix p = random_group_element(rng), q = random_group_element(rng);
    CHECK(act(p * q, k) == act(p, act(q, k)));
  }
}

TEST_CASE("phi is equivariant") {
  std::mt19937 rng(33);
  for (int t = 0; t < 50; ++t) {
    const CME k = random_element(rng);
    const Matrix p = random_group_element(rng);
    CHECK(phi(act(p, k)) == p * phi(k) * *inverse(p));
  }
}

TEST_CASE("decompose_ricci") {
  const auto id = decompose_ricci(Matrix::identity(3));
  CHECK(id.y == Rational(1, 2));
  CHECK(id.tracefree.is_zero());
  const Matrix m2 = verify_table()[3].value;
  CHECK(decompose_ricci(m2).y == 0);
  CHECK(decompose_ricci(m2).tracefree == m2);
  const Matrix me2{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}};
  CHECK(decompose_ricci(me2).y == 0);
  CHECK(decompose_ricci(me2).tracefree == me2);
  CHECK_THROWS_AS(decompose_ricci(gen_e()), std::invalid_argument);
}

TEST_CASE("adapted frames") {
  std::mt19937 rng(8);
  for (int t = 0; t < 10; ++t) {
    const Rational c = testutil::random_rational(rng, 6, 2), d = testutil::random_rational(rng, 6, 2);
    const Metric g = family_metric(c, d);
    const Point p = testutil::random_point(rng);
    const AdaptedFrame b = make_adapted_frame(g, p);
    CHECK(b.b.transpose() * g.gram_at(p) * b.b == minkowski_form());
  }
  CHECK_NOTHROW(adapted_frame(family_metric(3, 1), {0, 0, 0}, b0()));
  CHECK_THROWS_AS(adapted_frame(family_metric(3, 1), {0, 0, 1}, b0()), std::invalid_argument);
  // diag(2, 1, -1) needs sqrt(2).
  const Metric g2 = Metric::from_upper(2, 0, 0, 1, 0, -1, {0, 0, 0});
  CHECK_THROWS_AS(make_adapted_frame(g2, {0, 0, 0}), std::domain_error);
}

TEST_CASE("kappa at frames") {
  CHECK(kappa_at_frame(family_metric(0, 0), make_adapted_frame(family_metric(0, 0), {1, 2, 3})).is_zero());
  // Constant curvature k: tracefree part vanishes and y = -k (phi(kappa) = -A = -2k Id).
  for (const Rational& d : {Rational(1), Rational(2), Rational(-3, 2)}) {
    const Metric g = family_metric(0, d);
    const auto dec = decompose_ricci(phi(kappa_at_frame(g, make_adapted_frame(g, {0, 0, Rational(1, 3)}))));
    CHECK(dec.tracefree.is_zero());
    CHECK(dec.y == d * d / 4);
  }
  // phi(kappa_b) = -b^-1 A b against the Ricci operator at random points.
  std::mt19937 rng(12);
  for (int t = 0; t < 6; ++t) {
    const Rational c = testutil::random_rational(rng, 6, 2), d = testutil::random_rational(rng, 6, 2);
    const Metric g = family_metric(c, d);
    const Point p = testutil::random_point(rng);
    const AdaptedFrame b = make_adapted_frame(g, p);
    const CME k = kappa_at_frame(g, b);
    CHECK(satisfies_bianchi(k));
    const Matrix a = *inverse(b.b) * ricci_operator(g).at(p) * b.b;
    CHECK(phi(k) == a * Rational(-1));
    const auto dec = decompose_ricci(phi(k));
    CHECK(dec.y * 6 == -a.trace());
    // Frame change b -> b p gives p^-1 . kappa_b.
    const Matrix q = random_group_element(rng);
    const AdaptedFrame bq{p, b.b * q};
    CHECK(kappa_at_frame(g, bq) == act(*inverse(q), k));
  }
  // Along z = 0 with the isotropy aligned to H, kappa is H-invariant.
  for (const auto& [c, d] : std::vector<std::pair<Rational, Rational>>{{3, 1}, {1, 1}, {-2, 1}, {5, 2}}) {
    const Metric g = family_metric(c, d);
    const CME k = kappa_at_frame(g, adapted_frame(g, {Rational(1, 2), Rational(-1, 3), 0}, b0()));
    CHECK(act_infinitesimal(gen_h(), k).is_zero());
  }
  const Metric perturbed = Metric::from_upper(1, 0, 0, parse_expr("z^3", {}), 1, 0, {0, 0, 0});
  const CME kp = kappa_at_frame(perturbed, adapted_frame(perturbed, {0, 0, 1}, Matrix::from_columns({{0, 0, 1}, {1, 0, 0}, {0, 1, -Rational(1, 2)}})));
  CHECK(satisfies_bianchi(kp));
}

TEST_CASE("omega of Killing fields") {
  const Metric flat = family_metric(0, 0);
  const AdaptedFrame b = adapted_frame(flat, {0, 0, 0}, b0());
  const HElement ox = omega_of_killing(flat, kX, b);
  CHECK(ox.p.is_zero());
  CHECK(ox.t == vh);
  CHECK(omega_of_killing(flat, kZ, b).t == ve);
  for (const auto& [c, d] : std::vector<std::pair<Rational, Rational>>{{3, 1}, {1, 1}, {5, 2}, {0, 1}}) {
    const Metric g = family_metric(c, d);
    const AdaptedFrame f = adapted_frame(g, {0, 0, 0}, b0());
    const HElement oy = omega_of_killing(g, kY, f);
    CHECK(oy.p == gen_h());
    CHECK(oy.t == RVector{0, 0, 0});
    // omega(X') = h + (D/2) H, so X = X' - (D/2) Y has omega(X) = h.
    const VectorField x = kX - (d / 2) * kY;
    const HElement ow = omega_of_killing(g, x, f);
    CHECK(ow.p.is_zero());
    CHECK(ow.t == vh);
    // Z = -T has omega(Z) = e + gamma E with gamma = -D/2, and kappa(h, e) = -gamma^2 E.
    const Rational gamma = -d / 2;
    const HElement oz = omega_of_killing(g, t_scaled(c, d) * Rational(-1), f);
    CHECK(oz.t == ve);
    CHECK(oz.p == gen_e() * gamma);
    CHECK(kappa_at_frame(g, f).evaluate(vh, ve) == gen_e() * (-gamma * gamma));
  }
  CHECK_THROWS_AS(omega_of_killing(family_metric(1, 1), kZ, adapted_frame(family_metric(1, 1), {0, 0, 0}, b0())),
                  std::invalid_argument);
}

TEST_CASE("curvature-Killing identity") {
  const Metric flat = family_metric(0, 0);
  const AdaptedFrame b = adapted_frame(flat, {0, 0, 0}, b0());
  CHECK(check_identity(flat, kX, kH, b).is_zero());
  // Rotation-type field vanishing at the origin against a translation.
  CHECK(check_identity(flat, kY, kH, b).is_zero());
  struct Case {
    Rational c, d;
    Point p;
  };
  const std::vector<Case> cases{{0, 0, {0, 0, 0}},
                                {0, 0, {Rational(1, 3), 1, -2}},
                                {3, 1, {0, 0, 0}},
                                {3, 1, {Rational(1, 2), Rational(-1, 4), Rational(1, 5)}},
                                {1, 1, {0, 0, Rational(1, 3)}},
                                {1, 0, {Rational(2, 3), 0, Rational(1, 2)}},
                                {-2, 1, {0, 1, 1}}};
  for (const auto& cs : cases) {
    const Metric g = family_metric(cs.c, cs.d);
    const auto fields = solve_killing(g, 2).fields;
    const AdaptedFrame f = make_adapted_frame(g, cs.p);
    const Christoffel gamma = christoffel(g);
    const RiemannTensor r = riemann(g);
    for (const auto& x : fields)
      for (const auto& y : fields) CHECK(check_identity(g, gamma, r, x, y, f).is_zero());
  }
  // Bracket table of the three-dimensional subalgebra (X, Y, Z) at b0 for (3, 1):
  // [Y, X] = 0, [Y, Z] = -Z, [X, Z] = -gamma Z, center spanned by gamma Y - X.
  const Rational c(3), d(1), gamma = -d / 2;
  const VectorField x = kX - (d / 2) * kY, z = t_scaled(c, d) * Rational(-1);
  CHECK(bracket(kY, x).is_zero());
  CHECK(bracket(kY, z) == z * Rational(-1));
  CHECK(bracket(x, z) == z * (-gamma));
  CHECK(bracket(gamma * kY - x, z).is_zero());
}
