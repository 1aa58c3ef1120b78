#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "quasihom/families.hpp"
#include "quasihom/spec_file.hpp"

namespace quasihom {

using Json = nlohmann::ordered_json;

struct AnalyzeOptions {
  int max_degree = 2;
  std::vector<Rate> extra_rates;  // the zero rate is always included
};

/// The spec with every component expanded and parameters substituted, so
/// spec_from_echo(echo_spec(s)) builds the same metric as s.
Json echo_spec(const MetricSpec& spec);
MetricSpec spec_from_echo(const Json& echo);

/// Curvature summary, Killing basis, algebra class, isotropy at the base
/// point, orbit-rank samples and the degeneracy polynomial.
Json analyze_report(const MetricSpec& spec, const AnalyzeOptions& options = {});
Json killing_report(const MetricSpec& spec, int max_degree, const std::vector<Rate>& extra_rates = {});
/// Family mode: the analysis of g_{C,D} plus the geometry class. With `full`
/// the (+D,0,0) rate is added to the Killing solve. Throws CrossCheckError.
Json family_report(const FamilyParams& p, bool full);
Json sweep_report(const std::vector<SweepCell>& cells);
/// Basis table rows and curvature-Killing identity residuals on two metrics.
Json cartan_report();

/// True when every row and identity check in a cartan_report passed.
bool cartan_report_ok(const Json& report);
/// True when no sweep cell failed or disagreed.
bool sweep_report_ok(const Json& report);

MetricSpec family_spec(const FamilyParams& p);

}  // namespace quasihom
