#include "quasihom/families.hpp"

#include <cmath>

#include "quasihom/parse.hpp"

namespace quasihom {

namespace {

ExpPoly ep(const char* s, const ParamMap& pm = {}) { return ExpPoly(parse_expr(s, pm)); }

ParamMap params_of(const FamilyParams& p) { return {{"C", p.c}, {"D", p.d}}; }

// Field values at p, exact.
std::optional<RVector> value_at(const VectorField& f, const Point& p) {
  const auto v = f.evaluate_exact(p);
  if (!v) return std::nullopt;
  return RVector{(*v)[0], (*v)[1], (*v)[2]};
}

}  // namespace

Metric metric_gCD(const FamilyParams& p) {
  const ParamMap pm = params_of(p);
  auto e = [&](const char* s) { return parse_expr(s, pm); };
  return Metric::from_upper(e("1"), e("D*z"), e("0"), e("C*z^2"), e("1"), e("0"), {0, 0, 0});
}

std::vector<VectorField> standard_killing_fields() {
  return {VectorField::coordinate(Coord::x), VectorField::coordinate(Coord::h), VectorField(0, ep("-h"), ep("z"))};
}

VectorField extra_killing_T(const FamilyParams& p) {
  const ParamMap pm = params_of(p);
  return VectorField(ep("D*h", pm), ep("(D^2 - C)/2*h^2", pm), ep("(C - D^2)*z*h - 1", pm));
}

std::string to_string(GeometryTag tag) {
  switch (tag) {
    case GeometryTag::Minkowski: return "Minkowski";
    case GeometryTag::AdS3: return "AdS3";
    case GeometryTag::RtimesDS2: return "RtimesDS2";
    case GeometryTag::LorentzHeisenberg: return "LorentzHeisenberg";
    case GeometryTag::LeftInvariantSL2: return "LeftInvariantSL2";
    case GeometryTag::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

GeometryTag parameter_tag(const FamilyParams& p) {
  const bool c0 = sgn(p.c) == 0, d0 = sgn(p.d) == 0;
  if (c0 && d0) return GeometryTag::Minkowski;
  if (c0) return GeometryTag::AdS3;
  if (d0) return GeometryTag::RtimesDS2;
  if (p.c == p.d * p.d) return GeometryTag::LorentzHeisenberg;
  return GeometryTag::LeftInvariantSL2;
}

std::optional<Rational> zero_mu_mu_root(const CharPoly& cp) {
  if (!cp.constant()) return std::nullopt;
  const Rational c1 = cp.c1.constant(), c2 = cp.c2.constant(), c3 = cp.c3.constant();
  // lambda (lambda - mu)^2 = lambda^3 - 2 mu lambda^2 + mu^2 lambda.
  const Rational mu = c1 / 2;
  if (sgn(c3) != 0 || sgn(mu) == 0 || c2 != mu * mu) return std::nullopt;
  return mu;
}

GeometryClass classify_family_evidence(const FamilyParams& p) {
  const Metric g = metric_gCD(p);
  const Christoffel gamma = christoffel(g);
  const RiemannTensor r = riemann(g, gamma);
  const RicciOperator a = ricci_operator(g, r);
  const CharPoly cp = characteristic_polynomial(a);

  GeometryClass out;
  GeometryEvidence& ev = out.evidence;
  ev.constant_curvature = constant_curvature(g, r);
  ev.char_poly = cp.to_string();
  ev.mu = zero_mu_mu_root(cp);
  ev.spectrum_shape = ev.constant_curvature ? "constant" : ev.mu ? "(0,mu,mu)" : "other";

  const auto basis = solve_killing(g, 2, {zero_rate(), Rate{-p.d, 0, 0}});
  ev.killing_dimension = basis.dimension();

  if (ev.constant_curvature) {
    if (sgn(*ev.constant_curvature) == 0) out.tag = GeometryTag::Minkowski;
    else if (sgn(*ev.constant_curvature) < 0) out.tag = GeometryTag::AdS3;
    return out;
  }

  const LieAlgebra l = structure_constants(basis.fields);
  ev.algebra = classify(l);

  const auto z = center(l);
  if (z.size() == 1) {
    const VectorField cf = combine(basis.fields, z[0]);
    bool in_kernel = true;
    for (const Point& q : {Point{0, 0, 0}, Point{0, Rational(1, 3), Rational(1, 5)}}) {
      const auto v = value_at(cf, q);
      if (!v) {
        in_kernel = false;
        break;
      }
      for (const auto& x : a.at(q) * *v)
        if (sgn(x) != 0) in_kernel = false;
    }
    ev.center_in_ricci_kernel = in_kernel;
  }

  switch (ev.algebra->tag) {
    case AlgebraTag::RsemidirectHeis:
      out.tag = GeometryTag::LorentzHeisenberg;
      break;
    case AlgebraTag::RplusSl2:
      out.tag = ev.mu && ev.center_in_ricci_kernel ? GeometryTag::RtimesDS2 : GeometryTag::LeftInvariantSL2;
      break;
    default:
      out.tag = GeometryTag::Undetermined;
  }
  return out;
}

GeometryClass classify_family(const FamilyParams& p) {
  GeometryClass out = classify_family_evidence(p);
  const GeometryTag expected = parameter_tag(p);
  if (out.tag != expected) {
    throw CrossCheckError("classify_family(C=" + to_string(p.c) + ", D=" + to_string(p.d) + "): evidence gives " +
                          to_string(out.tag) + " but the parameters give " + to_string(expected));
  }
  return out;
}

std::vector<SweepCell> sweep_family(const std::vector<Rational>& cs, const std::vector<Rational>& ds,
                                    Assembly mode) {
  std::vector<SweepCell> cells;
  for (const auto& c : cs)
    for (const auto& d : ds) cells.push_back({{c, d}, std::nullopt, parameter_tag({c, d}), ""});
  const long n = static_cast<long>(cells.size());
  auto one = [&](long i) {
    try {
      cells[i].result = classify_family(cells[i].params);
    } catch (const std::exception& e) {
      cells[i].error = e.what();
    }
  };
  if (mode == Assembly::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) one(i);
  } else {
    for (long i = 0; i < n; ++i) one(i);
  }
  return cells;
}

std::vector<Rational> grid_values(const Rational& min, const Rational& max, const Rational& step) {
  if (sgn(step) <= 0) throw std::invalid_argument("grid step must be positive");
  if (min > max) throw std::invalid_argument("grid min exceeds max");
  std::vector<Rational> out;
  for (Rational v = min; v <= max; v += step) out.push_back(v);
  return out;
}

std::optional<RicciRoot> rank_one_ricci_root(const Matrix& q, const Matrix& gram) {
  if (q.rows() != 3 || q.cols() != 3 || q != q.transpose()) {
    throw std::invalid_argument("rank_one_ricci_root: Ricci form must be a symmetric 3x3 matrix");
  }
  const auto ginv = inverse(gram);
  if (!ginv) throw std::invalid_argument("rank_one_ricci_root: degenerate Gram matrix");
  if (rank(q) != 1) return std::nullopt;
  int i = 0;
  while (sgn(q(i, i)) == 0) ++i;  // rank one and symmetric: some diagonal entry is nonzero
  if (sgn(q(i, i)) < 0) return std::nullopt;

  RicciRoot out;
  // Ricci(u, u) = (q_i . u)^2 / q_ii, so the covector is q_i / sqrt(q_ii).
  const RVector w_unscaled = *ginv * q.row(i);
  int first = 0;
  while (sgn(w_unscaled[first]) == 0) ++first;
  const int sign = sgn(w_unscaled[first]);
  const double root = std::sqrt(q(i, i).get_d());
  for (int k = 0; k < 3; ++k) out.numeric[k] = sign * w_unscaled[k].get_d() / root;
  // Isotropy does not depend on the positive scale.
  const RVector gw = gram * w_unscaled;
  Rational norm;
  for (int k = 0; k < 3; ++k) norm += w_unscaled[k] * gw[k];
  out.isotropic = sgn(norm) == 0;
  Rational s;
  if (rational_sqrt(q(i, i), s)) {
    RVector w(3);
    for (int k = 0; k < 3; ++k) w[k] = sign * w_unscaled[k] / s;
    out.exact = w;
  }
  return out;
}

std::optional<RicciRoot> rank_one_ricci_root(const Metric& g, const Point& p) {
  const RatMatrix ric = ricci_tensor(riemann(g));
  Matrix q(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q(i, j) = ric[i][j].evaluate(p);
  return rank_one_ricci_root(q, g.gram_at(p));
}

}  // namespace quasihom
