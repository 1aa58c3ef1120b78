#include "doctest.h"
#include "quasihom/report.hpp"

using namespace quasihom;

namespace {

template <class F>
SpecError spec_error(F&& f) {
  try {
    f();
  } catch (const SpecError& e) {
    return e;
  }
  FAIL("expected SpecError");
  return SpecError("", 0, 0);
}

bool same_metric(const Metric& a, const Metric& b) { return a.components() == b.components(); }

}  // namespace

TEST_CASE("spec parsing") {
  const MetricSpec s = parse_spec(R"(# comment
[metric]
gxx = "1"
gxh = 'D*z'   # literal string
ghh = "C*z^2"
ghz = "1"
base_point = [0, "1/2", -1]

[params]
C = "3/2"
D = 2
)");
  CHECK(s.components[0] == "1");
  CHECK(s.components[1] == "D*z");
  CHECK(s.components[2] == "0");
  CHECK(s.params.at("C") == Rational(3, 2));
  CHECK(s.params.at("D") == Rational(2));
  CHECK(s.base_point == Point{0, Rational(1, 2), -1});
  const Metric g = to_metric(s);
  CHECK(g(0, 1) == parse_expr("2*z", {}));
  CHECK(g(1, 1) == parse_expr("3/2*z^2", {}));
  CHECK(g(2, 1) == Poly(1));
}

TEST_CASE("spec errors report positions") {
  auto e = spec_error([] { parse_spec("[metric]\ngxx = \"1\"\n[bogus]\n"); });
  CHECK(e.line() == 3);
  e = spec_error([] { parse_spec("[metric]\ngxx = \"1\"\ngxx = \"2\"\n"); });
  CHECK(e.line() == 3);
  CHECK(e.column() == 1);
  e = spec_error([] { parse_spec("[metric]\n  gqq = \"1\"\n"); });
  CHECK(e.line() == 2);
  CHECK(e.column() == 3);
  e = spec_error([] { parse_spec("gxx = \"1\"\n"); });
  CHECK(e.line() == 1);
  e = spec_error([] { parse_spec("[params]\nx = \"1\"\n"); });
  CHECK(e.line() == 2);
  e = spec_error([] { parse_spec("[metric]\nbase_point = [0, 0]\n"); });
  CHECK(e.line() == 2);
  e = spec_error([] { parse_spec("[metric]\ngxx = \"1\n"); });
  CHECK(e.line() == 2);
  // The expression error lands on the offending character: the value starts
  // at column 7, its first character at 8, and '*' is at offset 3.
  e = spec_error([] { to_metric(parse_spec("[metric]\ngxx = \"1 +* z\"\nghz = \"1\"\n")); });
  CHECK(e.line() == 2);
  CHECK(e.column() == 11);
  e = spec_error([] { read_spec_file("/nonexistent/spec.toml"); });
  CHECK(e.line() == 0);
  CHECK_THROWS_AS(to_metric(parse_spec("[metric]\ngxx = \"1\"\n")), MetricError);
}

TEST_CASE("round trips") {
  MetricSpec s = family_spec({Rational(3), Rational(1, 2)});
  s.base_point = {Rational(1, 3), 0, Rational(-2)};
  const MetricSpec t = parse_spec(to_toml(s));
  CHECK(same_metric(to_metric(s), to_metric(t)));
  CHECK(t.base_point == s.base_point);
  CHECK(to_toml(t) == to_toml(s));

  const Json echo = echo_spec(s);
  const MetricSpec back = spec_from_echo(echo);
  CHECK(same_metric(to_metric(back), to_metric(s)));
  CHECK(echo_spec(back) == echo);
  CHECK(echo["metric"]["gxh"] == "1/2*z");

  // The echoed spec inside a full report also reproduces the metric.
  const Json report = analyze_report(s);
  CHECK(same_metric(to_metric(spec_from_echo(report["spec"])), to_metric(s)));
}

TEST_CASE("analyze flat space") {
  const MetricSpec flat = parse_spec("[metric]\ngxx = \"1\"\nghz = \"1\"\n");
  const Json r = analyze_report(flat, {1, {}});
  CHECK(r["curvature"]["constant_curvature"] == "0");
  CHECK(r["killing"]["dimension"] == 6);
  CHECK(r["algebra"]["tag"] == "Sl2semidirectR3");
  CHECK(r["isotropy"]["dimension"] == 3);
  for (const auto& o : r["orbit_rank"]) CHECK(o["rank"] == 3);
  // Keys come out in a fixed order.
  std::vector<std::string> keys;
  for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"spec", "curvature", "killing", "algebra", "isotropy", "orbit_rank",
                                         "vol_determinant"});
}

TEST_CASE("family reports") {
  const Json heis = family_report({1, 1}, false);
  CHECK(heis["geometry"]["tag"] == "LorentzHeisenberg");
  CHECK(heis["geometry"]["parameter_tag"] == "LorentzHeisenberg");
  CHECK(heis["geometry"]["evidence"]["killing_dimension"] == 4);
  CHECK(heis["killing"]["dimension"] == 4);

  const Json sl2 = family_report({3, 1}, false);
  CHECK(sl2["geometry"]["tag"] == "LeftInvariantSL2");
  CHECK(sl2["algebra"]["tag"] == "RplusSl2");
  CHECK(sl2["algebra"]["center_dimension"] == 1);
  CHECK(sl2["isotropy"]["class"] == "Semisimple");

  const Json ads = family_report({0, 2}, true);
  CHECK(ads["geometry"]["tag"] == "AdS3");
  CHECK(ads["curvature"]["constant_curvature"] == "-1");
  CHECK(ads["killing"]["dimension"] == 6);

  CHECK(family_report({0, 0}, false)["geometry"]["tag"] == "Minkowski");
}

TEST_CASE("cartan and sweep reports") {
  const Json c = cartan_report();
  CHECK(cartan_report_ok(c));
  CHECK(c["table"].size() == 6);
  for (const auto& row : c["table"]) CHECK(row["matches"] == true);

  const auto values = grid_values(-1, 1, 1);
  const Json s = sweep_report(sweep_family(values, values, Assembly::Parallel));
  CHECK(sweep_report_ok(s));
  CHECK(s["total"] == 9);
  CHECK(s["failures"] == 0);
  CHECK(s.dump() == sweep_report(sweep_family(values, values, Assembly::Serial)).dump());
}

TEST_CASE("reports are deterministic") {
  const MetricSpec s = family_spec({Rational(-2), Rational(1)});
  CHECK(analyze_report(s).dump() == analyze_report(s).dump());
  CHECK(family_report({3, 1}, false).dump() == family_report({3, 1}, false).dump());
}
