#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "quasihom/metric.hpp"
#include "quasihom/parse.hpp"

namespace quasihom {

/// Malformed spec file, with 1-based line and column.
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                           what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }  // 0 when the error has no position
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

inline constexpr std::array<const char*, 6> kComponentKeys{"gxx", "gxh", "gxz", "ghh", "ghz", "gzz"};

struct MetricSpec {
  std::array<std::string, 6> components{"0", "0", "0", "0", "0", "0"};  // order of kComponentKeys
  ParamMap params;
  Point base_point{0, 0, 0};
  // Where each component's value starts in the source (0 when not read from text).
  std::array<std::size_t, 6> lines{}, columns{};
};

/// Reads the TOML subset used by spec files:
///
///   [metric]
///   gxx = "1"            # strings, parsed with the params below
///   ghz = "1"
///   base_point = [0, "1/2", 0]
///   [params]
///   C = "3"              # rational as a string or an integer
///
/// Missing components default to "0" and the base point to the origin.
/// Unknown tables or keys, duplicate keys and bad values raise SpecError.
MetricSpec parse_spec(std::string_view text);
MetricSpec read_spec_file(const std::string& path);

/// Builds the metric. Expression errors become SpecError pointing into the
/// component's value; MetricError (asymmetric, degenerate, wrong signature)
/// propagates.
Metric to_metric(const MetricSpec& spec);

/// Canonical TOML text for the spec (expanded components, sorted params).
std::string to_toml(const MetricSpec& spec);

}  // namespace quasihom
