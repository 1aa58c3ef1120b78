#include <omp.h>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "quasihom/report.hpp"

using namespace quasihom;

namespace {

constexpr int kInputError = 2;
constexpr int kAnalysisError = 1;

// Input problems that are not CLI11 parse errors.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_arg(const std::string& s, const char* name) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw InputError(std::string(name) + ": " + e.what());
  }
}

std::vector<Rate> rates_arg(const std::vector<std::string>& texts) {
  std::vector<Rate> out;
  for (const auto& t : texts) {
    try {
      out.push_back(parse_rate(t));
    } catch (const std::exception& e) {
      throw InputError("--exp-rate '" + t + "': " + e.what());
    }
  }
  return out;
}

MetricSpec spec_arg(const std::string& path) {
  MetricSpec spec = read_spec_file(path);
  to_metric(spec);  // validate early so input errors map to exit code 2
  return spec;
}

void emit(const Json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

struct Grid {
  Rational min, max, step;
};

Grid grid_arg(const std::string& s) {
  const auto a = s.find(':'), b = s.rfind(':');
  if (a == std::string::npos || a == b) throw InputError("--grid expects min:max:step");
  return {rational_arg(s.substr(0, a), "--grid"), rational_arg(s.substr(a + 1, b - a - 1), "--grid"),
          rational_arg(s.substr(b + 1), "--grid")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact curvature, Killing and Cartan analysis of 3-dimensional Lorentz metrics"};
  app.require_subcommand(1);

  std::string spec_path, output, c_text, d_text, grid_text, out_dir;
  int max_degree = 2, jobs = 0;
  std::vector<std::string> rate_texts;
  bool full = false;

  auto* analyze = app.add_subcommand("analyze", "Curvature, Killing algebra and isotropy of a spec file");
  analyze->add_option("spec", spec_path, "TOML spec file")->required();
  analyze->add_option("--max-degree", max_degree, "Polynomial degree of the Killing ansatz")->check(CLI::Range(0, 6));
  analyze->add_option("--exp-rate", rate_texts, "Extra exponential rate lx,lh,lz (repeatable)");
  analyze->add_option("-o,--output", output, "Write the report here instead of stdout");

  auto* family = app.add_subcommand("family", "Classify the metric g_{C,D}");
  family->add_option("--C", c_text, "C as p/q")->required();
  family->add_option("--D", d_text, "D as p/q")->required();
  family->add_flag("--full", full, "Also search the (+D,0,0) exponential sector");
  family->add_option("-o,--output", output, "Write the report here instead of stdout");

  auto* sweep = app.add_subcommand("sweep", "Classify g_{C,D} over a square grid of (C, D)");
  sweep->add_option("--grid", grid_text, "min:max:step for both C and D")->required();
  sweep->add_option("--jobs", jobs, "OpenMP threads (default: runtime default)")->check(CLI::NonNegativeNumber);
  sweep->add_option("--out", out_dir, "Directory for sweep.json")->required();

  auto* cartan = app.add_subcommand("cartan-check", "Verify the curvature-module table and the Killing identity");
  cartan->add_option("-o,--output", output, "Write the report here instead of stdout");

  auto* solve = app.add_subcommand("solve-killing", "Solve the Killing equation for a spec file");
  solve->add_option("spec", spec_path, "TOML spec file")->required();
  solve->add_option("--max-degree", max_degree, "Polynomial degree of the Killing ansatz")
      ->required()
      ->check(CLI::Range(0, 6));
  solve->add_option("--exp-rate", rate_texts, "Extra exponential rate lx,lh,lz (repeatable)");
  solve->add_option("-o,--output", output, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze) {
      AnalyzeOptions opt;
      opt.max_degree = max_degree;
      opt.extra_rates = rates_arg(rate_texts);
      emit(analyze_report(spec_arg(spec_path), opt), output);
    } else if (*family) {
      const FamilyParams p{rational_arg(c_text, "--C"), rational_arg(d_text, "--D")};
      emit(family_report(p, full), output);
    } else if (*sweep) {
      const Grid g = grid_arg(grid_text);
      std::vector<Rational> values;
      try {
        values = grid_values(g.min, g.max, g.step);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      if (jobs > 0) omp_set_num_threads(jobs);
      std::error_code ec;
      std::filesystem::create_directories(out_dir, ec);
      if (ec) throw InputError("cannot create '" + out_dir + "': " + ec.message());
      const Json report = sweep_report(sweep_family(values, values));
      emit(report, (std::filesystem::path(out_dir) / "sweep.json").string());
      std::cout << "cells " << report["total"].get<std::size_t>() << ", failures "
                << report["failures"].get<std::size_t>() << "\n";
      return sweep_report_ok(report) ? 0 : kAnalysisError;
    } else if (*cartan) {
      const Json report = cartan_report();
      emit(report, output);
      return cartan_report_ok(report) ? 0 : kAnalysisError;
    } else if (*solve) {
      emit(killing_report(spec_arg(spec_path), max_degree, rates_arg(rate_texts)), output);
    }
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const MetricError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "analysis error: " << e.what() << "\n";
    return kAnalysisError;
  }
  return 0;
}
