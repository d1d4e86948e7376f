#include "gpcnd/suite.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace gpcnd {

using nlohmann::json;

bool SuiteResult::all_pass() const {
  for (const CertReport& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

SuiteResult run_suite(const RunConfig& config, const std::string& label) {
  SuiteResult result;
  result.label = label.empty() ? "run" : label;
  result.config = config;

  const GraphSpec graph = config.graph();
  const SuiteParams& p = config.suite;

  const Ball ball = enumerate_ball(graph, p.radius, p.cap);
  result.n_elements = ball.size();
  result.ball_truncated = ball.truncated;

  auto add = [&](CertReport r) {
    r.instance = result.label;
    result.checks.push_back(std::move(r));
  };

  // CND certificates for the three functions, then Schoenberg transforms of
  // every matrix that passed (zero diagonal holds for all three).
  for (KernelFn fn :
       {KernelFn::PhiGamma, KernelFn::PhiTilde, KernelFn::ReducedLength}) {
    const SymMatrix k = build_kernel_matrix(graph, ball, fn);
    CertReport cnd = check_cnd(k, p.tol, "cnd[" + kernel_fn_name(fn) + "]");
    const bool cnd_pass = cnd.pass;
    add(std::move(cnd));
    if (cnd_pass) {
      for (CertReport& r : check_schoenberg(k, p.t_list, p.tol)) {
        r.name = kernel_fn_name(fn) + ":" + r.name;
        add(std::move(r));
      }
    }
  }

  add(check_invariance(graph, p.samples, p.seed));
  add(check_kernel_identity(graph, p.samples, p.seed + 1));
  add(check_restriction(graph, 50, p.seed + 2));
  add(check_pointwise_limit(graph, ball, p.n_list));
  add(check_properness(graph, std::max(1, p.radius), p.cap));
  if (graph.vertex_count() == 1 || graph.edgeless() || graph.complete()) {
    add(check_degeneration(graph, ball));
  }
  add(eigensolver_validation());

  return result;
}

std::string report_to_json(const SuiteResult& result) {
  json doc;
  doc["suite"] = result.label;
  const GraphSpec graph = result.config.graph();
  doc["graph"] = json::array();
  for (auto [a, b] : graph.edges()) doc["graph"].push_back({a, b});
  doc["vertex_groups"] = json::array();
  for (const VertexGroup& g : result.config.groups) {
    doc["vertex_groups"].push_back(g.describe());
  }
  doc["radius"] = result.config.suite.radius;
  doc["n_elements"] = result.n_elements;
  doc["truncated"] = result.ball_truncated;
  const SuiteParams& p = result.config.suite;
  doc["params"] = {{"radius", p.radius},   {"cap", p.cap},
                   {"tol", p.tol},         {"t_list", p.t_list},
                   {"n_list", p.n_list},   {"samples", p.samples},
                   {"seed", p.seed}};
  doc["defaults"] = describe_defaults();
  doc["all_pass"] = result.all_pass();
  doc["checks"] = json::array();
  for (const CertReport& c : result.checks) {
    json entry = {{"name", c.name},     {"pass", c.pass},
                  {"metric", c.metric}, {"tolerance", c.tolerance},
                  {"seed", c.seed},     {"ms", c.ms}};
    entry["size"] = c.size;
    if (!c.notes.empty()) entry["notes"] = c.notes;
    doc["checks"].push_back(std::move(entry));
  }
  return doc.dump(2);
}

namespace {

std::string table_line(const std::string& name, bool pass, double metric,
                       double tolerance, double ms) {
  std::ostringstream line;
  line << "  " << std::left << std::setw(38) << name << " "
       << (pass ? "PASS" : "FAIL") << std::right << "  metric="
       << std::setw(13) << std::scientific << std::setprecision(4) << metric
       << "  tol=" << std::setw(9) << std::setprecision(1) << tolerance
       << std::fixed << "  " << std::setw(8) << std::setprecision(1) << ms
       << " ms";
  return line.str();
}

}  // namespace

std::string report_table(const SuiteResult& result) {
  std::ostringstream out;
  const GraphSpec graph = result.config.graph();
  out << result.label << ": " << graph.describe() << "\n";
  out << "  ball: radius " << result.config.suite.radius << ", "
      << result.n_elements << " elements"
      << (result.ball_truncated ? " (truncated at cap)" : "") << "\n";
  for (const CertReport& c : result.checks) {
    out << table_line(c.name, c.pass, c.metric, c.tolerance, c.ms) << "\n";
  }
  out << "  => " << (result.all_pass() ? "ALL CHECKS PASS" : "FAILURES PRESENT")
      << "\n";
  return out.str();
}

std::string report_table_from_json(const std::string& json_text) {
  const json doc = json::parse(json_text);
  std::ostringstream out;
  out << doc.value("suite", "run") << ": groups[";
  const auto groups = doc.value("vertex_groups", json::array());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) out << ", ";
    out << groups[i].get<std::string>();
  }
  out << "] edges" << doc.value("graph", json::array()).dump() << "\n";
  out << "  ball: radius " << doc.value("radius", 0) << ", "
      << doc.value("n_elements", 0) << " elements"
      << (doc.value("truncated", false) ? " (truncated at cap)" : "") << "\n";
  for (const auto& c : doc.value("checks", json::array())) {
    out << table_line(c.value("name", "?"), c.value("pass", false),
                      c.value("metric", 0.0), c.value("tolerance", 0.0),
                      c.value("ms", 0.0))
        << "\n";
  }
  out << "  => "
      << (doc.value("all_pass", false) ? "ALL CHECKS PASS"
                                       : "FAILURES PRESENT")
      << "\n";
  return out.str();
}

std::vector<std::pair<std::string, RunConfig>> standard_suite() {
  auto z2 = VertexGroup::cyclic(2);
  auto z3 = VertexGroup::cyclic(3);
  auto z = VertexGroup::integers();
  auto f2 = VertexGroup::free_group(2);

  std::vector<std::pair<std::string, RunConfig>> suite;
  auto make = [&](std::string name, std::vector<VertexGroup> groups,
                  std::vector<std::pair<int, int>> edges) {
    RunConfig config;
    config.groups = std::move(groups);
    config.edges = std::move(edges);
    config.suite.radius = 4;
    suite.emplace_back(std::move(name), std::move(config));
  };

  make("edgeless-2", {z2, z}, {});
  make("edge-2", {f2, z2}, {{0, 1}});
  make("path-3", {z2, z, z2}, {{0, 1}, {1, 2}});
  make("square-4", {z2, z3, z2, z}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  make("pentagon-5", {z2, z2, z3, z2, z2},
       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  make("complete-3", {z2, z3, z}, {{0, 1}, {0, 2}, {1, 2}});
  return suite;
}

}  // namespace gpcnd
