#pragma once

#include <string>
#include <vector>

#include "gpcnd/ball.hpp"
#include "gpcnd/checks.hpp"
#include "gpcnd/config.hpp"

namespace gpcnd {

/// Everything one verification run produces.
struct SuiteResult {
  std::string label;
  RunConfig config;
  std::size_t n_elements = 0;
  bool ball_truncated = false;
  std::vector<CertReport> checks;

  bool all_pass() const;
};

/// Run the full certification suite on one configuration: ball enumeration,
/// CND certificates for phi_gamma / phi_tilde / reduced length, Schoenberg
/// transforms of each passing matrix, invariance and kernel-identity
/// sampling, the restriction identity, the pointwise-limit proxy, the
/// properness profile, degeneration cross-checks where the graph shape
/// allows them, and the eigensolver validation.
SuiteResult run_suite(const RunConfig& config, const std::string& label = "");

/// JSON report document for one run.
std::string report_to_json(const SuiteResult& result);

/// Plain-text summary table (one line per check).
std::string report_table(const SuiteResult& result);

/// Re-render a previously written JSON report as the summary table.
std::string report_table_from_json(const std::string& json_text);

/// The six standard instances (edgeless-2, edge-2, path-3, square-4,
/// pentagon-5, complete-3) with vertex groups drawn from
/// {Z/2, Z/3, Z, F_2} and default parameters.
std::vector<std::pair<std::string, RunConfig>> standard_suite();

}  // namespace gpcnd
