#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "quasihom/linalg.hpp"
#include "quasihom/poly.hpp"
#include "quasihom/ratfunc.hpp"

namespace quasihom {

using PolyMatrix = std::array<std::array<Poly, 3>, 3>;
using RatMatrix = std::array<std::array<RatFunc, 3>, 3>;
using DMatrix3 = std::array<std::array<double, 3>, 3>;

class MetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lorentz metric with polynomial coefficients in the chart (x, h, z).
/// The constructor rejects asymmetric input and anything whose Gram matrix at
/// the base point is degenerate or not of signature (2,1).
class Metric {
 public:
  Metric(const PolyMatrix& g, const Point& base_point);

  /// From the upper triangle (gxx, gxh, gxz, ghh, ghz, gzz).
  static Metric from_upper(const Poly& gxx, const Poly& gxh, const Poly& gxz, const Poly& ghh, const Poly& ghz,
                           const Poly& gzz, const Point& base_point);

  const Poly& operator()(int i, int j) const { return g_[i][j]; }
  const PolyMatrix& components() const { return g_; }
  const Point& base_point() const { return base_; }

  const Poly& determinant() const { return det_; }
  /// Cofactor matrix; the inverse metric is adjugate() / determinant().
  const PolyMatrix& adjugate() const { return adj_; }
  RatMatrix inverse() const;

  Matrix gram_at(const Point& p) const;
  DMatrix3 gram_at(const PointD& p) const;

  /// g(u, v) at p.
  Rational inner(const Point& p, const RVector& u, const RVector& v) const;

  friend bool operator==(const Metric& a, const Metric& b) { return a.g_ == b.g_ && a.base_ == b.base_; }

 private:
  PolyMatrix g_;
  Point base_;
  Poly det_;
  PolyMatrix adj_;
};

Poly determinant(const PolyMatrix& m);

/// Signature of m(p) after exact congruence diagonalization. Throws
/// MetricError when m(p) is degenerate.
Signature signature_at(const PolyMatrix& m, const Point& p);
Signature signature_at(const Metric& g, const Point& p);

}  // namespace quasihom
