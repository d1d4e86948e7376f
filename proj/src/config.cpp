#include "gpcnd/config.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gpcnd {

using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where, std::vector<std::string>& errors) {
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      errors.push_back(where + ": unknown key '" + item.key() + "'");
    }
  }
}

std::optional<VertexGroup> parse_group(const json& g, const std::string& where,
                                       std::vector<std::string>& errors) {
  if (!g.is_object()) {
    errors.push_back(where + ": expected an object");
    return std::nullopt;
  }
  check_keys(g, {"kind", "n", "rank"}, where, errors);
  if (!g.contains("kind") || !g["kind"].is_string()) {
    errors.push_back(where + ": missing or non-string 'kind'");
    return std::nullopt;
  }
  const std::string kind = g["kind"].get<std::string>();
  try {
    if (kind == "cyclic") {
      if (!g.contains("n") || !g["n"].is_number_integer()) {
        errors.push_back(where + ": cyclic group needs integer 'n'");
        return std::nullopt;
      }
      if (g.contains("rank")) {
        errors.push_back(where + ": 'rank' is not a cyclic group key");
      }
      return VertexGroup::cyclic(g["n"].get<int>());
    }
    if (kind == "integers") {
      if (g.contains("n") || g.contains("rank")) {
        errors.push_back(where + ": 'integers' takes no parameters");
      }
      return VertexGroup::integers();
    }
    if (kind == "free") {
      if (!g.contains("rank") || !g["rank"].is_number_integer()) {
        errors.push_back(where + ": free group needs integer 'rank'");
        return std::nullopt;
      }
      if (g.contains("n")) {
        errors.push_back(where + ": 'n' is not a free group key");
      }
      return VertexGroup::free_group(g["rank"].get<int>());
    }
  } catch (const std::invalid_argument& e) {
    errors.push_back(where + ": " + e.what());
    return std::nullopt;
  }
  errors.push_back(where + ": unknown group kind '" + kind + "'");
  return std::nullopt;
}

template <typename T>
bool read_number(const json& obj, const char* key, T& out,
                 const std::string& where, std::vector<std::string>& errors,
                 bool require_positive = true) {
  if (!obj.contains(key)) return false;
  const json& v = obj[key];
  const bool integral = std::is_integral_v<T>;
  if ((integral && !v.is_number_integer()) || (!integral && !v.is_number())) {
    errors.push_back(where + ": '" + key + "' has the wrong type");
    return false;
  }
  T value = v.get<T>();
  if (require_positive && !(value > T{0})) {
    errors.push_back(where + ": '" + key + "' must be positive");
    return false;
  }
  out = value;
  return true;
}

}  // namespace

ConfigParseResult parse_config(const std::string& text) {
  ConfigParseResult result;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    result.errors.push_back(std::string("malformed JSON: ") + e.what());
    return result;
  }
  if (!doc.is_object()) {
    result.errors.push_back("config must be a JSON object");
    return result;
  }

  auto& errors = result.errors;
  check_keys(doc, {"version", "vertices", "edges", "suite", "out"}, "config",
             errors);

  RunConfig config;
  if (doc.contains("version")) {
    if (!doc["version"].is_number_integer() || doc["version"].get<int>() != 1) {
      errors.push_back("config: unsupported version (expected 1)");
    }
  }

  if (!doc.contains("vertices") || !doc["vertices"].is_array() ||
      doc["vertices"].empty()) {
    errors.push_back("config: 'vertices' must be a nonempty array");
  } else {
    const auto& vertices = doc["vertices"];
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const std::string where = "vertices[" + std::to_string(i) + "]";
      const json& v = vertices[i];
      if (!v.is_object()) {
        errors.push_back(where + ": expected an object");
        continue;
      }
      check_keys(v, {"id", "group"}, where, errors);
      if (!v.contains("id") || !v["id"].is_number_integer() ||
          v["id"].get<std::size_t>() != i) {
        errors.push_back(where + ": 'id' must equal the position " +
                         std::to_string(i));
      }
      if (!v.contains("group")) {
        errors.push_back(where + ": missing 'group'");
        continue;
      }
      if (auto g = parse_group(v["group"], where + ".group", errors)) {
        config.groups.push_back(*g);
      }
    }
    if (config.groups.size() != vertices.size()) {
      // Some vertex failed to parse; the graph cannot be assembled.
      config.groups.clear();
    }
  }

  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) {
      errors.push_back("config: 'edges' must be an array of [i,j] pairs");
    } else {
      std::set<std::pair<int, int>> seen;
      const auto& edges = doc["edges"];
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
          errors.push_back(where + ": expected [i,j]");
          continue;
        }
        const int a = e[0].get<int>();
        const int b = e[1].get<int>();
        if (a == b) {
          errors.push_back(where + ": loop edge [" + std::to_string(a) + "," +
                           std::to_string(b) + "]");
          continue;
        }
        if (a < 0 || b < 0 ||
            (!config.groups.empty() &&
             (a >= static_cast<int>(config.groups.size()) ||
              b >= static_cast<int>(config.groups.size())))) {
          errors.push_back(where + ": endpoint out of range");
          continue;
        }
        const auto key = std::minmax(a, b);
        if (!seen.insert(key).second) {
          errors.push_back(where + ": duplicate edge [" + std::to_string(a) +
                           "," + std::to_string(b) + "]");
          continue;
        }
        config.edges.emplace_back(a, b);
      }
    }
  }

  if (doc.contains("suite")) {
    const json& suite = doc["suite"];
    if (!suite.is_object()) {
      errors.push_back("config: 'suite' must be an object");
    } else {
      check_keys(suite,
                 {"radius", "cap", "tol", "t_list", "n_list", "samples",
                  "seed"},
                 "suite", errors);
      read_number(suite, "radius", config.suite.radius, "suite", errors);
      read_number(suite, "cap", config.suite.cap, "suite", errors);
      // tol = 0 is allowed: it is the documented expected-fail demonstration
      // (strict tolerance makes the eigenvalue checks fail on rounding).
      if (suite.contains("tol")) {
        if (!suite["tol"].is_number() || suite["tol"].get<double>() < 0.0) {
          errors.push_back("suite: 'tol' must be a nonnegative number");
        } else {
          config.suite.tol = suite["tol"].get<double>();
        }
      }
      read_number(suite, "samples", config.suite.samples, "suite", errors);
      std::uint64_t seed = config.suite.seed;
      if (suite.contains("seed")) {
        if (!suite["seed"].is_number_unsigned() &&
            !suite["seed"].is_number_integer()) {
          errors.push_back("suite: 'seed' has the wrong type");
        } else {
          seed = suite["seed"].get<std::uint64_t>();
        }
      }
      config.suite.seed = seed;
      if (suite.contains("t_list")) {
        if (!suite["t_list"].is_array() || suite["t_list"].empty()) {
          errors.push_back("suite: 't_list' must be a nonempty array");
        } else {
          config.suite.t_list.clear();
          for (const auto& t : suite["t_list"]) {
            if (!t.is_number() || !(t.get<double>() > 0.0)) {
              errors.push_back("suite: t values must be positive numbers");
              break;
            }
            config.suite.t_list.push_back(t.get<double>());
          }
        }
      }
      if (suite.contains("n_list")) {
        if (!suite["n_list"].is_array() || suite["n_list"].empty()) {
          errors.push_back("suite: 'n_list' must be a nonempty array");
        } else {
          std::vector<int> n_list;
          bool ok = true;
          for (const auto& n : suite["n_list"]) {
            if (!n.is_number_integer() || !(n.get<int>() > 0)) {
              errors.push_back("suite: n values must be positive integers");
              ok = false;
              break;
            }
            n_list.push_back(n.get<int>());
          }
          for (std::size_t i = 1; ok && i < n_list.size(); ++i) {
            if (n_list[i] <= n_list[i - 1]) {
              errors.push_back("suite: 'n_list' must be strictly increasing");
              ok = false;
            }
          }
          if (ok) config.suite.n_list = std::move(n_list);
        }
      }
    }
  }

  if (doc.contains("out")) {
    if (!doc["out"].is_string()) {
      errors.push_back("config: 'out' must be a string path");
    } else {
      config.out = doc["out"].get<std::string>();
    }
  }

  if (!errors.empty()) return result;

  try {
    (void)config.graph();  // final structural validation
  } catch (const std::exception& e) {
    errors.push_back(std::string("config: ") + e.what());
    return result;
  }
  result.config = std::move(config);
  return result;
}

RunConfig parse_config_or_throw(const std::string& text) {
  ConfigParseResult result = parse_config(text);
  if (!result.ok()) {
    std::ostringstream msg;
    msg << "invalid config:";
    for (const auto& e : result.errors) msg << "\n  - " << e;
    throw std::invalid_argument(msg.str());
  }
  return *result.config;
}

std::string emit_config(const RunConfig& config) {
  json doc;
  doc["version"] = config.version;
  doc["vertices"] = json::array();
  for (std::size_t i = 0; i < config.groups.size(); ++i) {
    const VertexGroup& g = config.groups[i];
    json group;
    switch (g.kind()) {
      case GroupKind::CyclicFinite:
        group = {{"kind", "cyclic"}, {"n", g.param()}};
        break;
      case GroupKind::Integers:
        group = {{"kind", "integers"}};
        break;
      case GroupKind::FreeGroup:
        group = {{"kind", "free"}, {"rank", g.param()}};
        break;
    }
    doc["vertices"].push_back({{"id", i}, {"group", group}});
  }
  doc["edges"] = json::array();
  for (auto [a, b] : config.edges) doc["edges"].push_back({a, b});
  doc["suite"] = {{"radius", config.suite.radius},
                  {"cap", config.suite.cap},
                  {"tol", config.suite.tol},
                  {"t_list", config.suite.t_list},
                  {"n_list", config.suite.n_list},
                  {"samples", config.suite.samples},
                  {"seed", config.suite.seed}};
  if (!config.out.empty()) doc["out"] = config.out;
  return doc.dump(2);
}

std::string describe_defaults() {
  std::ostringstream s;
  const SuiteParams d;
  s << "radius=" << d.radius << " cap=" << d.cap << " tol=" << d.tol
    << " t_list=[";
  for (std::size_t i = 0; i < d.t_list.size(); ++i) {
    if (i) s << ",";
    s << d.t_list[i];
  }
  s << "] n_list=[";
  for (std::size_t i = 0; i < d.n_list.size(); ++i) {
    if (i) s << ",";
    s << d.n_list[i];
  }
  s << "] samples=" << d.samples << " seed=" << d.seed;
  return s.str();
}

}  // namespace gpcnd
