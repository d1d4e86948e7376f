#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gpcnd/config.hpp"
#include "gpcnd/suite.hpp"

using namespace gpcnd;

namespace {

const char* kMinimal = R"({
  "version": 1,
  "vertices": [{"id": 0, "group": {"kind": "cyclic", "n": 2}}]
})";

const char* kFull = R"({
  "version": 1,
  "vertices": [
    {"id": 0, "group": {"kind": "cyclic", "n": 3}},
    {"id": 1, "group": {"kind": "integers"}},
    {"id": 2, "group": {"kind": "free", "rank": 2}}
  ],
  "edges": [[0, 1], [1, 2]],
  "suite": {
    "radius": 2, "cap": 100, "tol": 1e-9,
    "t_list": [0.5, 1.0], "n_list": [1, 10],
    "samples": 20, "seed": 7
  },
  "out": "report.json"
})";

bool has_error_containing(const ConfigParseResult& r, const std::string& what) {
  return std::any_of(r.errors.begin(), r.errors.end(),
                     [&](const std::string& e) {
                       return e.find(what) != std::string::npos;
                     });
}

}  // namespace

TEST_CASE("minimal config gets the documented defaults") {
  const ConfigParseResult r = parse_config(kMinimal);
  REQUIRE(r.ok());
  const RunConfig& c = *r.config;
  CHECK(c.groups.size() == 1);
  CHECK(c.groups[0] == VertexGroup::cyclic(2));
  CHECK(c.edges.empty());
  CHECK(c.suite.radius == 3);
  CHECK(c.suite.cap == 300);
  CHECK(c.suite.tol == 1e-8);
  CHECK(c.suite.t_list == std::vector<double>{0.1, 0.5, 1.0, 2.0, 5.0});
  CHECK(c.suite.n_list == std::vector<int>{1, 2, 5, 10, 100});
  CHECK(c.suite.samples == 200);
  CHECK(c.suite.seed == 42);
  CHECK(c.out.empty());
}

TEST_CASE("full config parses") {
  const ConfigParseResult r = parse_config(kFull);
  REQUIRE(r.ok());
  const RunConfig& c = *r.config;
  CHECK(c.groups.size() == 3);
  CHECK(c.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(c.suite.radius == 2);
  CHECK(c.suite.seed == 7);
  CHECK(c.out == "report.json");
  CHECK_NOTHROW((void)c.graph());
}

TEST_CASE("loop and duplicate edges are rejected") {
  const ConfigParseResult loop = parse_config(R"({
    "vertices": [{"id":0,"group":{"kind":"cyclic","n":2}},
                 {"id":1,"group":{"kind":"cyclic","n":2}}],
    "edges": [[0,0]]
  })");
  CHECK_FALSE(loop.ok());
  CHECK(has_error_containing(loop, "loop edge"));

  const ConfigParseResult dup = parse_config(R"({
    "vertices": [{"id":0,"group":{"kind":"cyclic","n":2}},
                 {"id":1,"group":{"kind":"cyclic","n":2}}],
    "edges": [[0,1],[1,0]]
  })");
  CHECK_FALSE(dup.ok());
  CHECK(has_error_containing(dup, "duplicate edge"));
}

TEST_CASE("unknown keys and kinds are rejected, all errors collected") {
  const ConfigParseResult r = parse_config(R"({
    "vertices": [{"id":0,"group":{"kind":"quaternion"}},
                 {"id":5,"group":{"kind":"cyclic","n":1}}],
    "edges": [[0,9]],
    "suite": {"radius": -3, "frobnicate": 1},
    "mystery": true
  })");
  REQUIRE_FALSE(r.ok());
  CHECK(has_error_containing(r, "unknown group kind 'quaternion'"));
  CHECK(has_error_containing(r, "unknown key 'mystery'"));
  CHECK(has_error_containing(r, "unknown key 'frobnicate'"));
  CHECK(has_error_containing(r, "'id' must equal the position 1"));
  CHECK(has_error_containing(r, "must be positive"));
  CHECK(r.errors.size() >= 5);
}

TEST_CASE("malformed json and wrong shapes") {
  CHECK_FALSE(parse_config("{ not json").ok());
  CHECK_FALSE(parse_config("[]").ok());
  CHECK_FALSE(parse_config("{}").ok());  // vertices required
  CHECK(has_error_containing(parse_config(R"({"vertices":[], "version":2})"),
                             "unsupported version"));
  CHECK_THROWS_AS(parse_config_or_throw("{}"), std::invalid_argument);
}

TEST_CASE("round-trip: parse(emit(config)) == config") {
  std::vector<RunConfig> corpus;
  corpus.push_back(*parse_config(kMinimal).config);
  corpus.push_back(*parse_config(kFull).config);
  for (const auto& [name, config] : standard_suite()) corpus.push_back(config);
  for (const RunConfig& config : corpus) {
    const std::string text = emit_config(config);
    const ConfigParseResult back = parse_config(text);
    REQUIRE(back.ok());
    CHECK(*back.config == config);
  }
}

TEST_CASE("standard suite instances are well-formed") {
  const auto suite = standard_suite();
  REQUIRE(suite.size() == 6);
  CHECK(suite[0].first == "edgeless-2");
  CHECK(suite[5].first == "complete-3");
  for (const auto& [name, config] : suite) {
    CHECK_NOTHROW((void)config.graph());
    CHECK(config.suite.radius == 4);
    CHECK(config.suite.cap == 300);
  }
  // the four advertised families all appear somewhere
  bool cyc = false, ints = false, free = false;
  for (const auto& [name, config] : suite) {
    for (const VertexGroup& g : config.groups) {
      cyc = cyc || g.kind() == GroupKind::CyclicFinite;
      ints = ints || g.kind() == GroupKind::Integers;
      free = free || g.kind() == GroupKind::FreeGroup;
    }
  }
  CHECK(cyc);
  CHECK(ints);
  CHECK(free);
}
