#include "quasihom/metric.hpp"

namespace quasihom {

Poly determinant(const PolyMatrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

PolyMatrix adjugate_of(const PolyMatrix& m) {
  PolyMatrix adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // adj(i,j) = cofactor(j,i)
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return adj;
}

Matrix evaluate_matrix(const PolyMatrix& m, const Point& p) {
  Matrix out(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out(i, j) = m[i][j].evaluate(p);
  }
  return out;
}

}  // namespace

Signature signature_at(const PolyMatrix& m, const Point& p) {
  const Signature s = signature(evaluate_matrix(m, p));
  if (s.zero != 0) throw MetricError("metric is degenerate at the given point");
  return s;
}

Signature signature_at(const Metric& g, const Point& p) { return signature_at(g.components(), p); }

Metric::Metric(const PolyMatrix& g, const Point& base_point) : g_(g), base_(base_point) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (g_[i][j] != g_[j][i]) throw MetricError("metric components are not symmetric");
    }
  }
  det_ = quasihom::determinant(g_);
  if (det_.is_zero()) throw MetricError("metric determinant vanishes identically");
  const Signature s = signature_at(g_, base_);
  if (s.positive != 2 || s.negative != 1) {
    throw MetricError("metric signature at base point is (" + std::to_string(s.positive) + "," +
                      std::to_string(s.negative) + "), expected (2,1)");
  }
  adj_ = adjugate_of(g_);
}

Metric Metric::from_upper(const Poly& gxx, const Poly& gxh, const Poly& gxz, const Poly& ghh, const Poly& ghz,
                          const Poly& gzz, const Point& base_point) {
  PolyMatrix g{{{gxx, gxh, gxz}, {gxh, ghh, ghz}, {gxz, ghz, gzz}}};
  return Metric(g, base_point);
}

RatMatrix Metric::inverse() const {
  RatMatrix out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = RatFunc(adj_[i][j], det_);
  }
  return out;
}

Matrix Metric::gram_at(const Point& p) const { return evaluate_matrix(g_, p); }

DMatrix3 Metric::gram_at(const PointD& p) const {
  DMatrix3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = g_[i][j].evaluate(p);
  }
  return out;
}

Rational Metric::inner(const Point& p, const RVector& u, const RVector& v) const {
  const Matrix gp = gram_at(p);
  Rational s;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) s += u[i] * gp(i, j) * v[j];
  }
  return s;
}

}  // namespace quasihom
