#include "quasihom/curvature.hpp"

#include <sstream>
#include <stdexcept>

namespace quasihom {

namespace {

Coord co(int i) { return static_cast<Coord>(i); }

}  // namespace

Christoffel christoffel(const Metric& g) {
  Christoffel out;
  out.denom = g.determinant() * Rational(2);
  const PolyMatrix& adj = g.adjugate();
  // dg[l][i][j] = d_l g_ij
  std::array<PolyMatrix, 3> dg;
  for (int l = 0; l < 3; ++l) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) dg[l][i][j] = g(i, j).derivative(co(l));
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      std::array<Poly, 3> first_kind;  // d_i g_lj + d_j g_li - d_l g_ij
      for (int l = 0; l < 3; ++l) first_kind[l] = dg[i][l][j] + dg[j][l][i] - dg[l][i][j];
      for (int k = 0; k < 3; ++k) {
        Poly n;
        for (int l = 0; l < 3; ++l) {
          if (!first_kind[l].is_zero()) n += adj[k][l] * first_kind[l];
        }
        out.numer[k][i][j] = n;
        out.numer[k][j][i] = n;
        out.gamma[k][i][j] = RatFunc::from_factored(n, {out.denom});
        out.gamma[k][j][i] = out.gamma[k][i][j];
      }
    }
  }
  return out;
}

bool RiemannTensor::is_zero() const {
  for (const auto& a : up)
    for (const auto& b : a)
      for (const auto& c : b)
        for (const auto& d : c)
          if (!d.is_zero()) return false;
  return true;
}

RiemannTensor riemann(const Metric& g, const Christoffel& gm) {
  // Everything is accumulated as a polynomial over the common denominator
  // (2 det g)^2 and reduced once per component at the end.
  const Poly& dn = gm.denom;
  RiemannTensor out;
  out.denom = dn * dn;
  out.denom_factors = {dn, dn};
  std::array<Poly, 3> ddn;
  for (int j = 0; j < 3; ++j) ddn[j] = dn.derivative(co(j));
  // dN[j][l][i][k] = d_j N^l_ik dn - N^l_ik d_j dn
  std::array<std::array<std::array<std::array<Poly, 3>, 3>, 3>, 3> dN;
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l)
      for (int i = 0; i < 3; ++i)
        for (int k = i; k < 3; ++k) {
          const Poly& n = gm.numer[l][i][k];
          if (!n.is_zero()) dN[j][l][i][k] = n.derivative(co(j)) * dn - n * ddn[j];
          dN[j][l][k][i] = dN[j][l][i][k];
        }
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k) {
          Poly r = dN[j][l][i][k] - dN[k][l][i][j];
          for (int m = 0; m < 3; ++m) {
            const Poly& a = gm.numer[l][j][m];
            const Poly& b = gm.numer[m][i][k];
            if (!a.is_zero() && !b.is_zero()) r += a * b;
            const Poly& c = gm.numer[l][k][m];
            const Poly& d = gm.numer[m][i][j];
            if (!c.is_zero() && !d.is_zero()) r -= c * d;
          }
          out.up_numer[l][i][k][j] = -r;
          out.up_numer[l][i][j][k] = std::move(r);
        }
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k) {
          Poly s;
          for (int m = 0; m < 3; ++m) {
            if (!out.up_numer[m][i][j][k].is_zero() && !g(l, m).is_zero()) s += g(l, m) * out.up_numer[m][i][j][k];
          }
          out.lower_numer[l][i][k][j] = -s;
          out.lower_numer[l][i][j][k] = std::move(s);
        }
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          if (k < j) {
            out.up[l][i][j][k] = -out.up[l][i][k][j];
            out.lower[l][i][j][k] = -out.lower[l][i][k][j];
          } else {
            out.up[l][i][j][k] = RatFunc::from_factored(out.up_numer[l][i][j][k], {dn, dn});
            out.lower[l][i][j][k] = RatFunc::from_factored(out.lower_numer[l][i][j][k], {dn, dn});
          }
        }
  return out;
}

RiemannTensor riemann(const Metric& g) { return riemann(g, christoffel(g)); }

std::vector<std::string> riemann_symmetry_violations(const RiemannTensor& r) {
  std::vector<std::string> out;
  bool anti = true, bianchi = true, lower_anti = true, pair = true;
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          if (r.up[l][i][j][k] != -r.up[l][i][k][j]) anti = false;
          if (r.lower[l][i][j][k] != -r.lower[i][l][j][k]) lower_anti = false;
          if (r.lower[l][i][j][k] != r.lower[j][k][l][i]) pair = false;
          if (i < j && j < k) {
            const RatFunc s = r.up[l][i][j][k] + r.up[l][j][k][i] + r.up[l][k][i][j];
            if (!s.is_zero()) bianchi = false;
          }
        }
  if (!anti) out.emplace_back("antisymmetry in (j,k)");
  if (!bianchi) out.emplace_back("first Bianchi identity");
  if (!lower_anti) out.emplace_back("antisymmetry of R_lijk in (l,i)");
  if (!pair) out.emplace_back("pair symmetry R_lijk = R_jkli");
  return out;
}

namespace {

// Ricci_ij * denom, with denom = r.denom.
std::array<std::array<Poly, 3>, 3> ricci_numer(const RiemannTensor& r) {
  std::array<std::array<Poly, 3>, 3> out;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Poly s;
      for (int k = 0; k < 3; ++k) s += r.up_numer[k][i][k][j];
      out[i][j] = s;
      out[j][i] = s;
    }
  return out;
}

}  // namespace

RatMatrix ricci_tensor(const RiemannTensor& r) {
  const auto n = ricci_numer(r);
  RatMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = RatFunc::from_factored(n[i][j], r.denom_factors);
  return out;
}

Matrix RicciOperator::at(const Point& p) const {
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a[i][j].evaluate(p);
  return m;
}

RicciOperator ricci_operator(const Metric& g, const RiemannTensor& r) {
  const auto ric = ricci_numer(r);
  const PolyMatrix& adj = g.adjugate();
  RicciOperator out;
  const Poly den = r.denom * g.determinant();
  out.denom_factors = r.denom_factors;
  out.denom_factors.push_back(g.determinant());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Poly s;
      for (int k = 0; k < 3; ++k) {
        if (!ric[k][j].is_zero() && !adj[i][k].is_zero()) s += adj[i][k] * ric[k][j];
      }
      out.a[i][j] = RatFunc::from_factored(s, out.denom_factors);
      out.numer[i][j] = std::move(s);
    }
  out.denom = den;
  return out;
}

RicciOperator ricci_operator(const Metric& g) { return ricci_operator(g, riemann(g)); }

bool is_g_symmetric(const Metric& g, const RicciOperator& a) {
  // (g A)_ij must be symmetric; the shared denominator drops out.
  PolyMatrix ga;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Poly s;
      for (int k = 0; k < 3; ++k) s += g(i, k) * a.numer[k][j];
      ga[i][j] = s;
    }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (ga[i][j] != ga[j][i]) return false;
  return true;
}

namespace {

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Poly s;
      for (int k = 0; k < 3; ++k) {
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) s += a[i][k] * b[k][j];
      }
      out[i][j] = std::move(s);
    }
  return out;
}

Poly trace(const PolyMatrix& a) { return a[0][0] + a[1][1] + a[2][2]; }

std::vector<Poly> power(const std::vector<Poly>& factors, int n) {
  std::vector<Poly> out;
  for (int i = 0; i < n; ++i) out.insert(out.end(), factors.begin(), factors.end());
  return out;
}

}  // namespace

// Invariants are formed from the numerator matrix and reduced once, which
// avoids a gcd per intermediate product.
ScalarInvariants scalar_invariants(const RicciOperator& a) {
  const PolyMatrix n2 = multiply(a.numer, a.numer);
  Poly t3;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (!n2[i][k].is_zero() && !a.numer[k][i].is_zero()) t3 += n2[i][k] * a.numer[k][i];
    }
  const auto& f = a.denom_factors;
  return {RatFunc::from_factored(trace(a.numer), f), RatFunc::from_factored(trace(n2), power(f, 2)),
          RatFunc::from_factored(t3, power(f, 3))};
}

ScalarInvariants scalar_invariants(const Metric& g) { return scalar_invariants(ricci_operator(g)); }

CharPoly characteristic_polynomial(const RicciOperator& op) {
  const PolyMatrix& a = op.numer;
  const auto& f = op.denom_factors;
  CharPoly out;
  out.c1 = RatFunc::from_factored(trace(a), f);
  out.c2 = RatFunc::from_factored(a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2] - a[0][2] * a[2][0] + a[1][1] * a[2][2] -
                       a[1][2] * a[2][1],
                                  power(f, 2));
  out.c3 = RatFunc::from_factored(determinant(a), power(f, 3));
  return out;
}

std::string CharPoly::to_string() const {
  std::ostringstream os;
  os << "l^3";
  // Terms are -c1 l^2, +c2 l, -c3; constant coefficients fold their sign in.
  auto term = [&](const RatFunc& c, int sign, const char* power) {
    if (c.is_zero()) return;
    if (!c.is_constant()) {
      os << (sign > 0 ? " + (" : " - (") << c.to_string() << ")" << (power[0] ? "*" : "") << power;
      return;
    }
    const Rational v = c.constant() * sign;
    os << (sgn(v) > 0 ? " + " : " - ");
    const Rational a = abs(v);
    if (a != 1 || power[0] == '\0') os << quasihom::to_string(a) << (power[0] ? "*" : "");
    os << power;
  };
  term(c1, -1, "l^2");
  term(c2, 1, "l");
  term(c3, -1, "");
  return os.str();
}

std::optional<Rational> constant_curvature(const Metric& g, const RiemannTensor& r) {
  auto model = [&](int l, int i, int j, int k) { return g(l, j) * g(i, k) - g(l, k) * g(i, j); };
  std::optional<Rational> k_value;
  for (int l = 0; l < 3 && !k_value; ++l)
    for (int i = 0; i < 3 && !k_value; ++i)
      for (int j = 0; j < 3 && !k_value; ++j)
        for (int k = 0; k < 3 && !k_value; ++k) {
          const RatFunc& rv = r.lower[l][i][j][k];
          if (rv.is_zero()) continue;
          const Poly m = model(l, i, j, k);
          if (m.is_zero()) return std::nullopt;
          const RatFunc q = rv / RatFunc(m);
          if (!q.is_constant()) return std::nullopt;
          k_value = q.constant();
        }
  if (!k_value) return Rational(0);
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          if (r.lower[l][i][j][k] != RatFunc(model(l, i, j, k) * *k_value)) return std::nullopt;
        }
  return k_value;
}

std::optional<Rational> constant_curvature(const Metric& g) { return constant_curvature(g, riemann(g)); }

FieldFraction covariant_derivative(const Christoffel& gm, const VectorField& x, const VectorField& y) {
  FieldFraction out;
  out.denom = gm.denom;
  const ExpPoly den(gm.denom);
  for (int k = 0; k < 3; ++k) {
    ExpPoly s = den * x.apply(y[k]);
    for (int i = 0; i < 3; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < 3; ++j) {
        if (y[j].is_zero() || gm.numer[k][i][j].is_zero()) continue;
        s += ExpPoly(gm.numer[k][i][j]) * x[i] * y[j];
      }
    }
    out.numer[k] = s;
  }
  if (out.denom.is_constant()) {
    const Rational inv = Rational(1) / out.denom.constant();
    out.numer *= inv;
    out.denom = Poly(1);
  }
  return out;
}

FieldFraction covariant_derivative(const Metric& g, const VectorField& x, const VectorField& y) {
  return covariant_derivative(christoffel(g), x, y);
}

Matrix nabla_at(const Christoffel& gm, const VectorField& x, const Point& p) {
  const auto xv = x.evaluate_exact(p);
  if (!xv) throw std::domain_error("nabla_at: field does not evaluate exactly at the point");
  Matrix out(3, 3);
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      const auto d = x[k].derivative(co(i)).evaluate_exact(p);
      if (!d) throw std::domain_error("nabla_at: field does not evaluate exactly at the point");
      Rational s = *d;
      for (int j = 0; j < 3; ++j) s += gm(k, i, j).evaluate(p) * (*xv)[j];
      out(k, i) = s;
    }
  }
  return out;
}

}  // namespace quasihom
