// Multivariate gcd over Q by the recursive primitive-remainder-sequence
// method: split off the content with respect to the main variable, run a
// primitive PRS on the primitive parts, and multiply the contents back.

#include <stdexcept>

#include "quasihom/poly.hpp"

namespace quasihom {

namespace {

int main_variable(const Poly& a, const Poly& b) {
  for (int v = 2; v >= 0; --v) {
    const auto c = static_cast<Coord>(v);
    if (a.depends_on(c) || b.depends_on(c)) return v;
  }
  return -1;
}

// Coefficient of v^k, as a polynomial free of v.
Poly coeff_in(const Poly& p, int v, int k) {
  Poly out;
  for (const auto& [e, c] : p.terms()) {
    if (e[v] != k) continue;
    Exponent d = e;
    d[v] = 0;
    out.add_term(d, c);
  }
  return out;
}

Poly content_in(const Poly& p, int v) {
  const int n = p.degree_in(static_cast<Coord>(v));
  Poly g;
  for (int k = 0; k <= n; ++k) {
    Poly c = coeff_in(p, v, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

// Scales p to coprime integer coefficients with a positive leading term.
Poly integer_normalized(const Poly& p) {
  if (p.is_zero()) return p;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [_, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(p.leading_term().second) < 0) scale = -scale;
  return p * scale;
}

Poly primitive_in(const Poly& p, int v) {
  if (p.is_zero()) return p;
  return integer_normalized(exact_divide(p, content_in(p, v)));
}

Poly pseudo_remainder(const Poly& a, const Poly& b, int v) {
  const auto cv = static_cast<Coord>(v);
  const int n = b.degree_in(cv);
  const Poly lcb = coeff_in(b, v, n);
  Poly r = a;
  while (!r.is_zero() && r.degree_in(cv) >= n) {
    const int m = r.degree_in(cv);
    Exponent shift{0, 0, 0};
    shift[v] = static_cast<std::uint16_t>(m - n);
    const Poly lcr = coeff_in(r, v, m);
    r = integer_normalized(lcb * r - lcr * Poly::monomial(shift) * b);
  }
  return r;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);

  const int v = main_variable(a, b);
  const auto cv = static_cast<Coord>(v);
  if (!a.depends_on(cv)) return gcd(a, content_in(b, v));
  if (!b.depends_on(cv)) return gcd(content_in(a, v), b);

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  const Poly c = gcd(ca, cb);

  Poly p = exact_divide(a, ca);
  Poly q = exact_divide(b, cb);
  if (p.degree_in(cv) < q.degree_in(cv)) std::swap(p, q);
  while (true) {
    Poly r = pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (!r.depends_on(cv)) {
      q = Poly(1);
      break;
    }
    p = std::move(q);
    q = primitive_in(r, v);
  }
  return monic(c * primitive_in(q, v));
}

}  // namespace quasihom
