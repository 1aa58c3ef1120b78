#include "quasihom/killing.hpp"

#include <map>
#include <stdexcept>

#include <omp.h>

namespace quasihom {

namespace {

Coord co(int i) { return static_cast<Coord>(i); }

// Row key of the Killing system: component (i,j) with i <= j packed as 3i+j,
// then the monomial.
using RowKey = std::pair<int, Exponent>;

struct RowKeyLess {
  bool operator()(const RowKey& a, const RowKey& b) const {
    if (a.first != b.first) return a.first < b.first;
    return GradedLex{}(a.second, b.second);
  }
};

using Column = std::map<RowKey, Rational, RowKeyLess>;

// L_X g for X = exp(rate . x) * m * d_c, divided by the exponential factor.
Column killing_column(const Metric& g, const Rate& rate, int c, const Exponent& m) {
  const Poly mono = Poly::monomial(m);
  // d_i X^c / exp = d_i m + rate_i m
  std::array<Poly, 3> dx;
  for (int i = 0; i < 3; ++i) dx[i] = mono.derivative(co(i)) + mono * rate[i];
  Column col;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      Poly v = mono * g(i, j).derivative(co(c));
      if (!g(c, j).is_zero() && !dx[i].is_zero()) v += g(c, j) * dx[i];
      if (!g(i, c).is_zero() && !dx[j].is_zero()) v += g(i, c) * dx[j];
      for (const auto& [e, coef] : v.terms()) col.emplace(RowKey{3 * i + j, e}, coef);
    }
  }
  return col;
}

}  // namespace

ExpMatrix lie_derivative_metric(const Metric& g, const VectorField& x) {
  ExpMatrix out;
  std::array<std::array<ExpPoly, 3>, 3> dx;  // dx[i][k] = d_i X^k
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) dx[i][k] = x[k].derivative(co(i));
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      ExpPoly v;
      for (int k = 0; k < 3; ++k) {
        const Poly dg = g(i, j).derivative(co(k));
        if (!dg.is_zero()) v += x[k] * ExpPoly(dg);
        if (!g(k, j).is_zero()) v += ExpPoly(g(k, j)) * dx[i][k];
        if (!g(i, k).is_zero()) v += ExpPoly(g(i, k)) * dx[j][k];
      }
      out[j][i] = v;
      out[i][j] = std::move(v);
    }
  }
  return out;
}

bool is_killing(const Metric& g, const VectorField& x) {
  const ExpMatrix l = lie_derivative_metric(g, x);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      if (!l[i][j].is_zero()) return false;
  return true;
}

KillingSystem assemble_killing_system(const Metric& g, int max_degree, const Rate& rate, Assembly assembly) {
  const std::vector<Exponent> monos = monomials_up_to(max_degree);
  KillingSystem sys;
  for (int c = 0; c < 3; ++c)
    for (const auto& m : monos) sys.unknowns.emplace_back(c, m);
  const std::size_t n = sys.unknowns.size();
  std::vector<Column> cols(n);
  if (assembly == Assembly::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < n; ++k) {
      cols[k] = killing_column(g, rate, sys.unknowns[k].first, sys.unknowns[k].second);
    }
  } else {
    for (std::size_t k = 0; k < n; ++k) {
      cols[k] = killing_column(g, rate, sys.unknowns[k].first, sys.unknowns[k].second);
    }
  }
  std::map<RowKey, std::size_t, RowKeyLess> rows;
  for (const auto& col : cols)
    for (const auto& [key, _] : col) rows.emplace(key, 0);
  std::size_t r = 0;
  for (auto& [_, idx] : rows) idx = r++;
  sys.matrix = Matrix(rows.size(), n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [key, v] : cols[k]) sys.matrix(rows.at(key), k) = v;
  return sys;
}

KillingBasis solve_killing(const Metric& g, int max_degree, const std::vector<Rate>& rates, Assembly assembly) {
  if (max_degree < 0 || max_degree > kMaxKillingDegree) {
    throw std::invalid_argument("solve_killing: max_degree must lie in [0, " + std::to_string(kMaxKillingDegree) +
                                "]");
  }
  std::map<Rate, bool, RateLess> distinct;
  for (const auto& r : rates) distinct[r] = true;
  if (distinct.find(zero_rate()) == distinct.end()) {
    throw std::invalid_argument("solve_killing: the rate list must include the zero rate");
  }
  KillingBasis out{g, {}};
  for (const auto& [rate, _] : distinct) {
    const KillingSystem sys = assemble_killing_system(g, max_degree, rate, assembly);
    for (const RVector& v : nullspace(sys.matrix)) {
      std::array<Poly, 3> comp;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (sgn(v[k]) != 0) comp[sys.unknowns[k].first].add_term(sys.unknowns[k].second, v[k]);
      }
      out.fields.emplace_back(ExpPoly(rate, comp[0]), ExpPoly(rate, comp[1]), ExpPoly(rate, comp[2]));
    }
  }
  return out;
}

KillingBasis solve_killing(const Metric& g, int max_degree) { return solve_killing(g, max_degree, {zero_rate()}); }

namespace {

std::optional<Matrix> exact_values(const std::vector<VectorField>& fields, const Point& p) {
  Matrix m(3, fields.size());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto v = fields[i].evaluate_exact(p);
    if (!v) return std::nullopt;
    for (int k = 0; k < 3; ++k) m(k, i) = (*v)[k];
  }
  return m;
}

}  // namespace

std::size_t evaluation_rank(const std::vector<VectorField>& fields, const Point& p) {
  if (fields.empty()) return 0;
  if (const auto m = exact_values(fields, p)) return rank(*m);
  const PointD pd = to_double(p);
  std::vector<std::vector<double>> rows;
  for (const auto& f : fields) {
    const auto v = f.evaluate(pd);
    rows.push_back({v[0], v[1], v[2]});
  }
  return numeric_rank(rows, 1e-12);
}

std::vector<std::size_t> sample_evaluation_ranks(const std::vector<VectorField>& fields,
                                                 const std::vector<PointD>& points, Assembly assembly) {
  std::vector<std::size_t> out(points.size());
  const long n = static_cast<long>(points.size());
  auto one = [&](long i) {
    std::vector<std::vector<double>> rows;
    for (const auto& f : fields) {
      const auto v = f.evaluate(points[i]);
      rows.push_back({v[0], v[1], v[2]});
    }
    out[i] = fields.empty() ? 0 : numeric_rank(rows, 1e-12);
  };
  if (assembly == Assembly::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) one(i);
  } else {
    for (long i = 0; i < n; ++i) one(i);
  }
  return out;
}

std::vector<RVector> isotropy_coefficients(const std::vector<VectorField>& fields, const Point& p) {
  if (fields.empty()) return {};
  const auto m = exact_values(fields, p);
  if (!m) throw std::domain_error("isotropy_subalgebra: fields do not evaluate exactly at the point");
  return nullspace(*m);
}

std::vector<VectorField> isotropy_subalgebra(const std::vector<VectorField>& fields, const Point& p) {
  std::vector<VectorField> out;
  for (const auto& c : isotropy_coefficients(fields, p)) out.push_back(combine(fields, c));
  return out;
}

ExpPoly vol_determinant(const std::vector<VectorField>& f) {
  if (f.size() != 3) throw std::invalid_argument("vol_determinant needs exactly three fields");
  // Rows are fields, columns components.
  return f[0][0] * (f[1][1] * f[2][2] - f[1][2] * f[2][1]) - f[0][1] * (f[1][0] * f[2][2] - f[1][2] * f[2][0]) +
         f[0][2] * (f[1][0] * f[2][1] - f[1][1] * f[2][0]);
}

}  // namespace quasihom
