#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quasihom/metric.hpp"
#include "quasihom/vector_field.hpp"

namespace quasihom {

using RatTensor3 = std::array<std::array<std::array<RatFunc, 3>, 3>, 3>;
using RatTensor4 = std::array<RatTensor3, 3>;

/// Levi-Civita connection coefficients Gamma^k_ij, plus the same values over
/// the shared denominator 2*det(g) (used where exp-polynomial fields are
/// multiplied by Gamma).
struct Christoffel {
  RatTensor3 gamma;                                  // gamma[k][i][j]
  std::array<std::array<std::array<Poly, 3>, 3>, 3> numer;  // gamma = numer / denom
  Poly denom;
  const RatFunc& operator()(int k, int i, int j) const { return gamma[k][i][j]; }
};

Christoffel christoffel(const Metric& g);

/// R^l_ijk with R(d_j, d_k) d_i = R^l_ijk d_l, and the lowered R_lijk = g_lm R^m_ijk.
struct RiemannTensor {
  RatTensor4 up;     // up[l][i][j][k]
  RatTensor4 lower;  // lower[l][i][j][k]
  // The same components over the shared denominator (2 det g)^2.
  std::array<std::array<std::array<std::array<Poly, 3>, 3>, 3>, 3> up_numer, lower_numer;
  Poly denom{1};
  std::vector<Poly> denom_factors;
  const RatFunc& operator()(int l, int i, int j, int k) const { return up[l][i][j][k]; }
  bool is_zero() const;
};

RiemannTensor riemann(const Metric& g, const Christoffel& gamma);
RiemannTensor riemann(const Metric& g);

/// Names of the index symmetries that fail (empty when all hold): antisymmetry
/// in (j,k), first Bianchi, antisymmetry of the lowered tensor in (l,i), pair symmetry.
std::vector<std::string> riemann_symmetry_violations(const RiemannTensor& r);

/// Ricci_ij = R^k_ikj.
RatMatrix ricci_tensor(const RiemannTensor& r);

/// A^i_j = g^{ik} Ricci_kj, so Ricci(u, v) = g(Au, v).
struct RicciOperator {
  RatMatrix a;
  PolyMatrix numer;  // a = numer / denom
  Poly denom{1};
  std::vector<Poly> denom_factors;  // product is denom
  const RatFunc& operator()(int i, int j) const { return a[i][j]; }
  Matrix at(const Point& p) const;
};

RicciOperator ricci_operator(const Metric& g, const RiemannTensor& r);
RicciOperator ricci_operator(const Metric& g);

/// g(Au, v) = g(u, Av) as an exact identity.
bool is_g_symmetric(const Metric& g, const RicciOperator& a);

struct ScalarInvariants {
  RatFunc tr1, tr2, tr3;  // tr A, tr A^2, tr A^3
  bool constant() const { return tr1.is_constant() && tr2.is_constant() && tr3.is_constant(); }
};

ScalarInvariants scalar_invariants(const RicciOperator& a);
ScalarInvariants scalar_invariants(const Metric& g);

/// det(lambda - A) = lambda^3 - c1 lambda^2 + c2 lambda - c3.
struct CharPoly {
  RatFunc c1, c2, c3;
  bool constant() const { return c1.is_constant() && c2.is_constant() && c3.is_constant(); }
  std::string to_string() const;
};

CharPoly characteristic_polynomial(const RicciOperator& a);

/// k when R_lijk = k (g_lj g_ik - g_lk g_ij) holds identically.
std::optional<Rational> constant_curvature(const Metric& g, const RiemannTensor& r);
std::optional<Rational> constant_curvature(const Metric& g);

/// nabla_X Y as a field over a polynomial denominator.
FieldFraction covariant_derivative(const Christoffel& gamma, const VectorField& x, const VectorField& y);
FieldFraction covariant_derivative(const Metric& g, const VectorField& x, const VectorField& y);

/// (nabla X)(p) as a matrix: column i is nabla_{d_i} X at p. Requires X to
/// evaluate exactly at p.
Matrix nabla_at(const Christoffel& gamma, const VectorField& x, const Point& p);

}  // namespace quasihom
