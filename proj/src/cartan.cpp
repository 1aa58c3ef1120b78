#include "quasihom/cartan.hpp"

#include <sstream>
#include <stdexcept>

namespace quasihom {

namespace {

constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};

RVector basis_vector(int i) {
  RVector v(3);
  v[i] = 1;
  return v;
}

// w*(u) = <w, u> for a basis vector w: I maps basis vector i to 2 - i.
const Rational& dual_of_basis(int i, const RVector& u) { return u[2 - i]; }

Matrix outer(const RVector& col, const RVector& row) {
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = col[i] * row[j];
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix inverse_or_throw(const Matrix& m, const char* what) {
  auto inv = inverse(m);
  if (!inv) throw std::invalid_argument(what);
  return *inv;
}

}  // namespace

std::array<Rational, 3> o21_coordinates(const Matrix& m) {
  if (!in_o21(m)) throw std::invalid_argument("o21_coordinates: matrix is not in o(2,1)");
  return {m(1, 2), m(0, 0), m(2, 1)};
}

Matrix o21_element(const std::array<Rational, 3>& c) { return gen_e() * c[0] + gen_h() * c[1] + gen_f() * c[2]; }

CurvatureModuleElement CurvatureModuleElement::simple(int v, int w, const Matrix& x) {
  CurvatureModuleElement out;
  if (v == w) return out;
  const int lo = std::min(v, w), hi = std::max(v, w);
  const Rational sign = v < w ? 1 : -1;
  int pair = 0;
  for (int p = 0; p < 3; ++p)
    if (kPairs[p][0] == lo && kPairs[p][1] == hi) pair = p;
  const auto c = o21_coordinates(x);
  for (int g = 0; g < 3; ++g) out.c_[pair][g] = sign * c[g];
  return out;
}

CurvatureModuleElement CurvatureModuleElement::from_values(const Matrix& on_fh, const Matrix& on_fe,
                                                          const Matrix& on_he) {
  CurvatureModuleElement out;
  out.c_[EH] = o21_coordinates(on_fh);
  out.c_[EF] = o21_coordinates(on_fe);
  out.c_[HF] = o21_coordinates(on_he);
  return out;
}

Matrix CurvatureModuleElement::evaluate(const RVector& u, const RVector& v) const {
  Matrix out(3, 3);
  for (int p = 0; p < 3; ++p) {
    const int a = kPairs[p][0], b = kPairs[p][1];
    const Rational form = dual_of_basis(a, u) * dual_of_basis(b, v) - dual_of_basis(a, v) * dual_of_basis(b, u);
    if (sgn(form) != 0) out += o21_element(c_[p]) * form;
  }
  return out;
}

bool CurvatureModuleElement::is_zero() const {
  for (const auto& row : c_)
    for (const auto& x : row)
      if (sgn(x) != 0) return false;
  return true;
}

CurvatureModuleElement& CurvatureModuleElement::operator+=(const CurvatureModuleElement& o) {
  for (int p = 0; p < 3; ++p)
    for (int g = 0; g < 3; ++g) c_[p][g] += o.c_[p][g];
  return *this;
}

CurvatureModuleElement& CurvatureModuleElement::operator*=(const Rational& s) {
  for (auto& row : c_)
    for (auto& x : row) x *= s;
  return *this;
}

std::string CurvatureModuleElement::to_string() const {
  static const char* pair_names[3] = {"e*^h*", "e*^f*", "h*^f*"};
  static const char* gen_names[3] = {"E", "H", "F"};
  std::ostringstream os;
  bool first = true;
  for (int p = 0; p < 3; ++p)
    for (int g = 0; g < 3; ++g) {
      const Rational& c = c_[p][g];
      if (sgn(c) == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1) os << "(" << quasihom::to_string(c) << ") ";
      os << pair_names[p] << "(x)" << gen_names[g];
    }
  return first ? "0" : os.str();
}

bool satisfies_bianchi(const CurvatureModuleElement& k) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const RVector u = basis_vector(a), v = basis_vector(b), w = basis_vector(c);
        const RVector s1 = k.evaluate(u, v) * w, s2 = k.evaluate(v, w) * u, s3 = k.evaluate(w, u) * v;
        for (int i = 0; i < 3; ++i)
          if (sgn(s1[i] + s2[i] + s3[i]) != 0) return false;
      }
  return true;
}

Matrix phi(const CurvatureModuleElement& w) {
  const Matrix form = minkowski_form();
  Matrix out(3, 3);
  for (int p = 0; p < 3; ++p) {
    const RVector v = basis_vector(kPairs[p][0]), u = basis_vector(kPairs[p][1]);
    std::array<Rational, 3> c;
    for (int g = 0; g < 3; ++g) c[g] = w.coeff(static_cast<CurvatureModuleElement::Pair>(p),
                                                static_cast<CurvatureModuleElement::Gen>(g));
    if (sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0) continue;
    const Matrix x = o21_element(c);
    // v* o X as a row vector is (I v)^T X, stored transposed.
    const RVector v_star_x = x.transpose() * (form * v);
    const RVector u_star_x = x.transpose() * (form * u);
    out += outer(v, u_star_x) - outer(u, v_star_x);
  }
  return out;
}

std::vector<TableRow> verify_table() {
  using CME = CurvatureModuleElement;
  const RVector e = basis_vector(0), h = basis_vector(1), f = basis_vector(2);
  const Matrix form = minkowski_form();
  // a* (x) v is the endomorphism u -> <a, u> v.
  auto t = [&](const RVector& a, const RVector& v) { return outer(v, form * a); };
  const Matrix E = gen_e(), H = gen_h(), F = gen_f();
  enum { ie = 0, ih = 1, jf = 2 };
  std::vector<TableRow> rows{
      {"m_d", (t(f, e) + t(h, h) + t(e, f)) * Rational(2),
       CME::simple(ih, ie, F) + CME::simple(ie, jf, H) + CME::simple(jf, ih, E), {}, false, false, ""},
      {"m_e2", t(e, e), CME::simple(ie, ih, E), {}, false, false, ""},
      {"m_eh", t(h, e) + t(e, h), CME::simple(jf, ie, E) + CME::simple(ie, ih, H), {}, false, false,
       "f*^h*(x)H replaced by e*^h*(x)H"},
      {"m_2h2-ef", t(h, h) * Rational(2) - t(f, e) - t(e, f),
       CME::simple(jf, ie, H) * Rational(2) + CME::simple(jf, ih, E) + CME::simple(ih, ie, F), {}, false, false, ""},
      {"m_hf", t(f, h) + t(h, f), CME::simple(ih, jf, H) + CME::simple(jf, ie, F), {}, false, false, ""},
      {"m_f2", t(f, f), CME::simple(ih, jf, F), {}, false, false, ""},
  };
  for (auto& r : rows) {
    r.value = phi(r.element);
    r.matches = r.value == r.expected;
    r.i_symmetric = is_i_symmetric(r.value);
  }
  return rows;
}

CurvatureModuleElement printed_m_eh_element() {
  return CurvatureModuleElement::simple(2, 0, gen_e()) + CurvatureModuleElement::simple(2, 1, gen_h());
}

bool table_ok(const std::vector<TableRow>& rows) {
  if (rows.size() != 6) return false;
  for (const auto& r : rows)
    if (!r.matches || !r.i_symmetric) return false;
  return rows[0].value == Matrix::identity(3) * Rational(2);
}

Matrix exp_e(const Rational& t) {
  const Matrix e = gen_e();
  return Matrix::identity(3) + e * t + e * e * (t * t / 2);
}

Matrix exp_f(const Rational& t) {
  const Matrix f = gen_f();
  return Matrix::identity(3) + f * t + f * f * (t * t / 2);
}

Matrix torus(const Rational& lambda) {
  if (sgn(lambda) == 0) throw std::invalid_argument("torus: lambda must be nonzero");
  return Matrix{{lambda, 0, 0}, {0, 1, 0}, {0, 0, 1 / lambda}};
}

bool in_o21_group(const Matrix& p) {
  const Matrix form = minkowski_form();
  return p.rows() == 3 && p.cols() == 3 && p.transpose() * form * p == form;
}

CurvatureModuleElement act(const Matrix& p, const CurvatureModuleElement& k) {
  if (!in_o21_group(p)) throw std::invalid_argument("act: matrix is not an exact element of O(2,1)");
  const Matrix pinv = inverse_or_throw(p, "act: singular matrix");
  const RVector e = basis_vector(0), h = basis_vector(1), f = basis_vector(2);
  auto val = [&](const RVector& u, const RVector& v) { return p * k.evaluate(pinv * u, pinv * v) * pinv; };
  return CurvatureModuleElement::from_values(val(f, h), val(f, e), val(h, e));
}

CurvatureModuleElement act_infinitesimal(const Matrix& a, const CurvatureModuleElement& k) {
  if (!in_o21(a)) throw std::invalid_argument("act_infinitesimal: matrix is not in o(2,1)");
  const RVector e = basis_vector(0), h = basis_vector(1), f = basis_vector(2);
  auto val = [&](const RVector& u, const RVector& v) {
    return commutator(a, k.evaluate(u, v)) - k.evaluate(a * u, v) - k.evaluate(u, a * v);
  };
  return CurvatureModuleElement::from_values(val(f, h), val(f, e), val(h, e));
}

RicciDecomposition decompose_ricci(const Matrix& m) {
  if (!is_i_symmetric(m)) {
    throw std::invalid_argument("decompose_ricci: endomorphism has a component in o(2,1)");
  }
  const Rational tr = m.trace();
  return {tr / 6, m - Matrix::identity(3) * (tr / 3)};
}

AdaptedFrame adapted_frame(const Metric& g, const Point& p, const Matrix& b) {
  if (b.rows() != 3 || b.cols() != 3 || b.transpose() * g.gram_at(p) * b != minkowski_form()) {
    throw std::invalid_argument("adapted_frame: b^T g(p) b differs from I");
  }
  return {p, b};
}

AdaptedFrame make_adapted_frame(const Metric& g, const Point& p) {
  const Matrix gram = g.gram_at(p);
  const auto cd = congruence_diagonalize(gram);
  std::vector<int> pos, neg;
  for (int i = 0; i < 3; ++i) {
    if (sgn(cd.diagonal[i]) > 0) pos.push_back(i);
    if (sgn(cd.diagonal[i]) < 0) neg.push_back(i);
  }
  if (pos.size() != 2 || neg.size() != 1) throw std::domain_error("make_adapted_frame: g(p) is not of signature (2,1)");
  const int n = neg[0];
  for (int k = 0; k < 2; ++k) {
    const int hi = pos[k], q = pos[1 - k];
    Rational sh, t;
    if (!rational_sqrt(cd.diagonal[hi], sh)) continue;
    if (!rational_sqrt(cd.diagonal[q] / -cd.diagonal[n], t)) continue;
    const RVector uq = cd.basis.column(q), un = cd.basis.column(n), uh = cd.basis.column(hi);
    RVector e(3), h(3), f(3);
    for (int i = 0; i < 3; ++i) {
      e[i] = (uq[i] + t * un[i]) / (2 * cd.diagonal[q]);
      h[i] = uh[i] / sh;
      f[i] = uq[i] - t * un[i];
    }
    return adapted_frame(g, p, Matrix::from_columns({e, h, f}));
  }
  throw std::domain_error("make_adapted_frame: an exact frame needs an irrational square root");
}

CurvatureModuleElement kappa_at_frame(const RiemannTensor& r, const AdaptedFrame& b) {
  std::array<std::array<std::array<std::array<Rational, 3>, 3>, 3>, 3> rp;
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) rp[l][i][j][k] = r.up[l][i][j][k].evaluate(b.point);
  const Matrix binv = inverse_or_throw(b.b, "kappa_at_frame: singular frame");
  auto endo = [&](const RVector& u, const RVector& v) {
    Matrix m(3, 3);
    for (int l = 0; l < 3; ++l)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            if (sgn(rp[l][i][j][k]) != 0) m(l, i) += rp[l][i][j][k] * u[j] * v[k];
    return m;
  };
  auto val = [&](int a, int c) { return binv * endo(b.b.column(a), b.b.column(c)) * b.b; };
  return CurvatureModuleElement::from_values(val(2, 1), val(2, 0), val(1, 0));
}

CurvatureModuleElement kappa_at_frame(const Metric& g, const AdaptedFrame& b) {
  adapted_frame(g, b.point, b.b);
  return kappa_at_frame(riemann(g), b);
}

bool HElement::is_zero() const {
  if (!p.is_zero()) return false;
  for (const auto& x : t)
    if (sgn(x) != 0) return false;
  return true;
}

HElement h_bracket(const HElement& a, const HElement& b) {
  HElement out;
  out.p = commutator(a.p, b.p);
  const RVector aw = a.p * b.t, bv = b.p * a.t;
  for (int i = 0; i < 3; ++i) out.t[i] = aw[i] - bv[i];
  return out;
}

HElement operator+(const HElement& a, const HElement& b) {
  HElement out;
  out.p = a.p + b.p;
  for (int i = 0; i < 3; ++i) out.t[i] = a.t[i] + b.t[i];
  return out;
}

HElement operator-(const HElement& a, const HElement& b) {
  HElement out;
  out.p = a.p - b.p;
  for (int i = 0; i < 3; ++i) out.t[i] = a.t[i] - b.t[i];
  return out;
}

HElement omega_of_killing(const Metric& g, const Christoffel& gamma, const VectorField& x, const AdaptedFrame& b) {
  const auto xp = x.evaluate_exact(b.point);
  if (!xp) throw std::domain_error("omega_of_killing: field does not evaluate exactly at the frame point");
  const Matrix n = nabla_at(gamma, x, b.point);
  const Matrix gram = g.gram_at(b.point);
  if (!(n.transpose() * gram + gram * n).is_zero()) {
    throw std::invalid_argument("omega_of_killing: nabla X is not skew, so X is not Killing");
  }
  const Matrix binv = inverse_or_throw(b.b, "omega_of_killing: singular frame");
  HElement out;
  out.p = binv * n * b.b;
  out.t = binv * RVector{(*xp)[0], (*xp)[1], (*xp)[2]};
  return out;
}

HElement omega_of_killing(const Metric& g, const VectorField& x, const AdaptedFrame& b) {
  return omega_of_killing(g, christoffel(g), x, b);
}

HElement check_identity(const Metric& g, const Christoffel& gamma, const RiemannTensor& r, const VectorField& x,
                        const VectorField& y, const AdaptedFrame& b) {
  const HElement ox = omega_of_killing(g, gamma, x, b);
  const HElement oy = omega_of_killing(g, gamma, y, b);
  const HElement oxy = omega_of_killing(g, gamma, bracket(x, y), b);
  HElement k;
  k.p = kappa_at_frame(r, b).evaluate(ox.t, oy.t);
  return oxy - h_bracket(oy, ox) - k;
}

HElement check_identity(const Metric& g, const VectorField& x, const VectorField& y, const AdaptedFrame& b) {
  return check_identity(g, christoffel(g), riemann(g), x, y, b);
}

}  // namespace quasihom
