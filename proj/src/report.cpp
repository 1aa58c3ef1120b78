#include "quasihom/report.hpp"

#include "quasihom/cartan.hpp"

namespace quasihom {

namespace {

std::string str(const Rational& r) { return to_string(r); }

Json point_json(const Point& p) { return Json::array({str(p[0]), str(p[1]), str(p[2])}); }

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(str(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json algebra_json(const AlgebraClass& c, const LieAlgebra& l) {
  Json out;
  out["class"] = c.to_string();
  out["tag"] = to_string(c.tag);
  out["unimodular"] = is_unimodular(l);
  out["derived_dimension"] = derived_algebra(l).size();
  out["center_dimension"] = center(l).size();
  return out;
}

Json curvature_json(const Metric& g, const RiemannTensor& r) {
  Json out;
  const auto k = constant_curvature(g, r);
  out["constant_curvature"] = k ? Json(str(*k)) : Json("none");
  const RicciOperator a = ricci_operator(g, r);
  const CharPoly cp = characteristic_polynomial(a);
  out["ricci_char_poly"] = {{"c1", cp.c1.to_string()}, {"c2", cp.c2.to_string()}, {"c3", cp.c3.to_string()},
                            {"constant", cp.constant()}};
  const ScalarInvariants s = scalar_invariants(a);
  out["scalar_invariants"] = {
      {"tr_A", s.tr1.to_string()}, {"tr_A2", s.tr2.to_string()}, {"tr_A3", s.tr3.to_string()}, {"constant", s.constant()}};
  return out;
}

std::vector<Rate> with_zero(const std::vector<Rate>& extra) {
  std::vector<Rate> rates{zero_rate()};
  for (const auto& r : extra)
    if (!is_zero_rate(r)) rates.push_back(r);
  return rates;
}

Json rates_json(const std::vector<Rate>& rates) {
  Json out = Json::array();
  for (const auto& r : rates) out.push_back(to_string(r));
  return out;
}

Json killing_json(const KillingBasis& b, int max_degree, const std::vector<Rate>& rates) {
  Json out;
  out["max_degree"] = max_degree;
  out["rates"] = rates_json(rates);
  out["dimension"] = b.dimension();
  Json fields = Json::array();
  for (const auto& f : b.fields) fields.push_back(f.to_string());
  out["fields"] = fields;
  return out;
}

Json isotropy_json(const Metric& g, const Christoffel& gamma, const std::vector<VectorField>& fields,
                   const Point& p) {
  Json out;
  std::vector<VectorField> iso;
  try {
    iso = isotropy_subalgebra(fields, p);
  } catch (const std::domain_error&) {
    out["dimension"] = nullptr;
    out["class"] = "inexact";
    return out;
  }
  out["dimension"] = iso.size();
  if (iso.size() != 1) {
    out["class"] = iso.empty() ? "none" : "higher-dimensional";
    return out;
  }
  const Matrix n = nabla_at(gamma, iso[0], p);
  out["generator"] = iso[0].to_string();
  out["class"] = to_string(classify_skew_endomorphism(n, g.gram_at(p)));
  return out;
}

Json orbit_json(const std::vector<VectorField>& fields, const Point& base) {
  const std::vector<Point> offsets{{0, 0, 0},
                                   {Rational(1, 3), Rational(1, 5), Rational(1, 7)},
                                   {Rational(-1, 2), Rational(1, 4), Rational(2, 3)},
                                   {0, Rational(1, 2), 0}};
  Json out = Json::array();
  for (const auto& o : offsets) {
    const Point p{base[0] + o[0], base[1] + o[1], base[2] + o[2]};
    out.push_back({{"point", point_json(p)}, {"rank", evaluation_rank(fields, p)}});
  }
  return out;
}

Json vol_json(const std::vector<VectorField>& f) {
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const ExpPoly d = vol_determinant({f[i], f[j], f[k]});
        if (!d.is_zero()) return {{"fields", Json::array({i, j, k})}, {"determinant", d.to_string()}};
      }
  return nullptr;
}

Json analysis(const MetricSpec& spec, int max_degree, const std::vector<Rate>& rates) {
  const Metric g = to_metric(spec);
  const Christoffel gamma = christoffel(g);
  const RiemannTensor r = riemann(g, gamma);
  Json out;
  out["spec"] = echo_spec(spec);
  out["curvature"] = curvature_json(g, r);
  const KillingBasis b = solve_killing(g, max_degree, rates);
  out["killing"] = killing_json(b, max_degree, rates);
  const LieAlgebra l = structure_constants(b.fields);
  out["algebra"] = algebra_json(classify(l), l);
  out["isotropy"] = isotropy_json(g, gamma, b.fields, spec.base_point);
  out["orbit_rank"] = orbit_json(b.fields, spec.base_point);
  out["vol_determinant"] = vol_json(b.fields);
  return out;
}

}  // namespace

Json echo_spec(const MetricSpec& spec) {
  Json metric;
  for (int i = 0; i < 6; ++i) metric[kComponentKeys[i]] = parse_expr(spec.components[i], spec.params).to_string();
  metric["base_point"] = point_json(spec.base_point);
  Json params = Json::object();
  for (const auto& [k, v] : spec.params) params[k] = str(v);
  return {{"metric", metric}, {"params", params}};
}

MetricSpec spec_from_echo(const Json& echo) {
  MetricSpec spec;
  const Json& m = echo.at("metric");
  for (int i = 0; i < 6; ++i) spec.components[i] = m.at(kComponentKeys[i]).get<std::string>();
  for (int i = 0; i < 3; ++i) spec.base_point[i] = parse_rational(m.at("base_point").at(i).get<std::string>());
  for (const auto& [name, value] : echo.at("params").items()) spec.params[name] = parse_rational(value.get<std::string>());
  return spec;
}

Json analyze_report(const MetricSpec& spec, const AnalyzeOptions& options) {
  return analysis(spec, options.max_degree, with_zero(options.extra_rates));
}

Json killing_report(const MetricSpec& spec, int max_degree, const std::vector<Rate>& extra_rates) {
  const Metric g = to_metric(spec);
  const auto rates = with_zero(extra_rates);
  Json out;
  out["spec"] = echo_spec(spec);
  out["killing"] = killing_json(solve_killing(g, max_degree, rates), max_degree, rates);
  return out;
}

MetricSpec family_spec(const FamilyParams& p) {
  MetricSpec spec;
  spec.components = {"1", "D*z", "0", "C*z^2", "1", "0"};
  spec.params = {{"C", p.c}, {"D", p.d}};
  return spec;
}

Json family_report(const FamilyParams& p, bool full) {
  const GeometryClass gc = classify_family(p);
  std::vector<Rate> extra{Rate{-p.d, 0, 0}};
  if (full) extra.push_back(Rate{p.d, 0, 0});
  Json out;
  out["params"] = {{"C", str(p.c)}, {"D", str(p.d)}};
  Json geom;
  geom["tag"] = to_string(gc.tag);
  geom["parameter_tag"] = to_string(parameter_tag(p));
  const GeometryEvidence& ev = gc.evidence;
  geom["evidence"] = {
      {"constant_curvature", ev.constant_curvature ? Json(str(*ev.constant_curvature)) : Json("none")},
      {"killing_dimension", ev.killing_dimension},
      {"algebra", ev.algebra ? Json(ev.algebra->to_string()) : Json(nullptr)},
      {"ricci_char_poly", ev.char_poly},
      {"spectrum_shape", ev.spectrum_shape},
      {"mu", ev.mu ? Json(str(*ev.mu)) : Json(nullptr)},
      {"center_in_ricci_kernel", ev.center_in_ricci_kernel}};
  out["geometry"] = geom;
  Json a = analysis(family_spec(p), 2, with_zero(extra));
  for (auto it = a.begin(); it != a.end(); ++it) out[it.key()] = it.value();
  return out;
}

Json sweep_report(const std::vector<SweepCell>& cells) {
  Json out;
  Json arr = Json::array();
  std::size_t failures = 0;
  for (const auto& c : cells) {
    Json cell;
    cell["C"] = str(c.params.c);
    cell["D"] = str(c.params.d);
    cell["expected"] = to_string(c.expected);
    if (c.result) {
      cell["tag"] = to_string(c.result->tag);
      cell["killing_dimension"] = c.result->evidence.killing_dimension;
      cell["algebra"] = c.result->evidence.algebra ? Json(c.result->evidence.algebra->to_string()) : Json(nullptr);
    } else {
      cell["tag"] = nullptr;
    }
    const bool ok = c.error.empty() && c.result && c.result->tag == c.expected;
    if (!ok) ++failures;
    cell["ok"] = ok;
    if (!c.error.empty()) cell["error"] = c.error;
    arr.push_back(cell);
  }
  out["cells"] = arr;
  out["total"] = cells.size();
  out["failures"] = failures;
  return out;
}

Json cartan_report() {
  Json out;
  Json rows = Json::array();
  const auto table = verify_table();
  for (const auto& r : table) {
    Json row;
    row["name"] = r.name;
    row["element"] = r.element.to_string();
    row["expected"] = matrix_json(r.expected);
    row["phi"] = matrix_json(r.value);
    row["matches"] = r.matches;
    row["i_symmetric"] = r.i_symmetric;
    row["bianchi"] = satisfies_bianchi(r.element);
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(row);
  }
  out["table"] = rows;
  out["table_ok"] = table_ok(table);

  Json checks = Json::array();
  for (const auto& p : std::vector<FamilyParams>{{0, 0}, {3, 1}, {1, 1}}) {
    const Metric g = metric_gCD(p);
    const Christoffel gamma = christoffel(g);
    const RiemannTensor r = riemann(g, gamma);
    const auto fields = solve_killing(g, 2).fields;
    const Point pt{Rational(1, 3), Rational(1, 2), Rational(1, 5)};
    const AdaptedFrame b = make_adapted_frame(g, pt);
    std::size_t pairs = 0, nonzero = 0;
    for (const auto& x : fields)
      for (const auto& y : fields) {
        ++pairs;
        if (!check_identity(g, gamma, r, x, y, b).is_zero()) ++nonzero;
      }
    checks.push_back({{"C", str(p.c)}, {"D", str(p.d)}, {"point", point_json(pt)}, {"pairs", pairs},
                      {"nonzero_residuals", nonzero}});
  }
  out["identity_checks"] = checks;
  return out;
}

bool cartan_report_ok(const Json& report) {
  if (!report.at("table_ok").get<bool>()) return false;
  for (const auto& c : report.at("identity_checks"))
    if (c.at("nonzero_residuals").get<std::size_t>() != 0) return false;
  return true;
}

bool sweep_report_ok(const Json& report) { return report.at("failures").get<std::size_t>() == 0; }

}  // namespace quasihom
