#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpcnd/graph.hpp"

namespace gpcnd {

/// Verification-suite parameters with their documented defaults.
struct SuiteParams {
  int radius = 3;
  std::size_t cap = 300;
  double tol = 1e-8;
  std::vector<double> t_list{0.1, 0.5, 1.0, 2.0, 5.0};
  std::vector<int> n_list{1, 2, 5, 10, 100};
  int samples = 200;
  std::uint64_t seed = 42;

  bool operator==(const SuiteParams&) const = default;
};

/// One run's worth of configuration: the graph, the suite parameters and an
/// optional report output path. `groups`/`edges` keep the declared order so
/// emit_config round-trips.
struct RunConfig {
  int version = 1;
  std::vector<VertexGroup> groups;
  std::vector<std::pair<int, int>> edges;
  SuiteParams suite;
  std::string out;  // empty: no report file

  GraphSpec graph() const { return GraphSpec(groups, edges); }

  bool operator==(const RunConfig&) const = default;
};

/// Either a validated config or every validation error found (not just the
/// first).
struct ConfigParseResult {
  std::optional<RunConfig> config;
  std::vector<std::string> errors;

  bool ok() const { return config.has_value(); }
};

ConfigParseResult parse_config(const std::string& text);

/// parse_config, collapsing the error list into an std::invalid_argument.
RunConfig parse_config_or_throw(const std::string& text);

std::string emit_config(const RunConfig& config);

/// The defaults, formatted for --help output and reports.
std::string describe_defaults();

}  // namespace gpcnd
