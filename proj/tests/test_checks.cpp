#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gpcnd/checks.hpp"
#include "gpcnd/degeneration.hpp"

using namespace gpcnd;

namespace {

VertexElement scalar(std::int64_t n) { return VertexElement{n, {}}; }

SymMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  SymMatrix m(static_cast<int>(rows.size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("check_psd") {
  const double e1 = std::exp(-1.0);
  CHECK(check_psd(from_rows({{1.0, e1}, {e1, 1.0}}), 1e-8).pass);
  CHECK_FALSE(check_psd(from_rows({{0.0, 1.0}, {1.0, 0.0}}), 1e-8).pass);
  CHECK(check_psd(from_rows({{1.0, 0.0}, {0.0, 1.0}}), 1e-8).pass);
  CHECK_THROWS_AS(check_psd(from_rows({{0.0, 1.0}, {2.0, 0.0}}), 1e-8),
                  std::invalid_argument);
  const CertReport r = check_psd(from_rows({{0.0, 1.0}, {1.0, 0.0}}), 1e-8);
  CHECK(r.metric == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(r.size == 2);
}

TEST_CASE("check_cnd") {
  CHECK(check_cnd(from_rows({{0.0, 1.0}, {1.0, 0.0}}), 1e-8).pass);
  CHECK(check_cnd(from_rows({{0.0, 2.0}, {2.0, 0.0}}), 1e-8).pass);
  CHECK_FALSE(check_cnd(from_rows({{0.0, -1.0}, {-1.0, 0.0}}), 1e-8).pass);
  // centered flip matrix has max eigenvalue exactly 0
  const CertReport r = check_cnd(from_rows({{0.0, 1.0}, {1.0, 0.0}}), 1e-8);
  CHECK(std::abs(r.metric) <= 1e-12);
}

TEST_CASE("check_schoenberg") {
  const SymMatrix flip = from_rows({{0.0, 1.0}, {1.0, 0.0}});
  const auto reports = check_schoenberg(flip, {1.0, 2.0}, 1e-8);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].pass);
  CHECK(reports[1].pass);
  // eigenvalues 1 ± e^-t: min at t=1 is 1 - e^-1
  CHECK(reports[0].metric ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-10));

  const auto zeros = check_schoenberg(SymMatrix(3), {0.5}, 1e-8);
  CHECK(zeros[0].pass);  // all-ones matrix, rank-1 PSD

  const SymMatrix neg = from_rows({{0.0, -1.0}, {-1.0, 0.0}});
  CHECK_FALSE(check_schoenberg(neg, {1.0}, 1e-8)[0].pass);

  CHECK_THROWS_AS(check_schoenberg(flip, {}, 1e-8), std::invalid_argument);
}

TEST_CASE("invariance / kernel identity / restriction on sample graphs") {
  auto z2 = VertexGroup::cyclic(2);
  auto z3 = VertexGroup::cyclic(3);
  auto z = VertexGroup::integers();
  auto f2 = VertexGroup::free_group(2);
  const GraphSpec graphs[] = {
      GraphSpec({z2, z}, {}),
      GraphSpec({f2, z2}, {{0, 1}}),
      GraphSpec({z2, z3, z2}, {{0, 1}, {1, 2}}),
  };
  for (const GraphSpec& graph : graphs) {
    const CertReport inv = check_invariance(graph, 100, 42);
    CHECK(inv.pass);
    CHECK(inv.metric <= 1e-10);
    CHECK(inv.seed == 42);

    const CertReport ker = check_kernel_identity(graph, 100, 43);
    CHECK(ker.pass);

    const CertReport res = check_restriction(graph, 50, 44);
    CHECK(res.pass);
    CHECK(res.metric == 0.0);
  }
}

TEST_CASE("pointwise limit proxy") {
  auto z2 = VertexGroup::cyclic(2);
  const GraphSpec graph({z2, z2}, {});
  const Ball ball = enumerate_ball(graph, 3, 300);
  const CertReport r = check_pointwise_limit(graph, ball, {1, 2, 5, 10, 100});
  CHECK(r.pass);
  // scalar sanity: phi = 6 at n = 100
  CHECK(std::exp(-6.0 / 100.0) >= 1.0 - 0.06);
  CHECK(r.metric > 0.0);
  CHECK(r.metric <= 1.0);

  CHECK_THROWS_AS(check_pointwise_limit(graph, ball, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_pointwise_limit(graph, ball, {1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_pointwise_limit(graph, ball, {5, 2}),
                  std::invalid_argument);
}

TEST_CASE("properness profile: edgeless Z,Z and complete K2 Z/2,Z/2") {
  auto z = VertexGroup::integers();
  const GraphSpec zz({z, z}, {});
  const PropernessProfile p = properness_profile(zz, 5, 100000);
  CHECK(p.monotone);
  REQUIRE(p.spheres.size() == 5);
  for (int r = 1; r <= 5; ++r) {
    const SphereStat& s = p.spheres[static_cast<std::size_t>(r - 1)];
    CHECK(s.radius == r);
    CHECK(s.min_phi_gamma == static_cast<double>(r + 1));
  }

  auto z2 = VertexGroup::cyclic(2);
  const GraphSpec k2({z2, z2}, {{0, 1}});
  const PropernessProfile q = properness_profile(k2, 3, 300);
  REQUIRE(q.spheres.size() == 2);  // sphere 3 empty: group exhausted
  CHECK(q.spheres[0].min_phi_gamma == 2.0);
  CHECK(q.spheres[1].min_phi_gamma == 4.0);

  CHECK(check_properness(zz, 4, 100000).pass);
  CHECK_THROWS_AS(properness_profile(zz, 0, 10), std::invalid_argument);
}

TEST_CASE("degeneration checks") {
  auto z2 = VertexGroup::cyclic(2);
  auto z3 = VertexGroup::cyclic(3);

  const GraphSpec edgeless({z2, z2}, {});
  CHECK(check_degeneration(edgeless, enumerate_ball(edgeless, 4, 300)).pass);

  const GraphSpec k3({z2, z2, z2}, {{0, 1}, {0, 2}, {1, 2}});
  const Ball k3ball = enumerate_ball(k3, 3, 300);
  CHECK(k3ball.size() == 8);
  CHECK(check_degeneration(k3, k3ball).pass);

  const GraphSpec single({z3}, {});
  CHECK(check_degeneration(single, enumerate_ball(single, 2, 300)).pass);

  const GraphSpec mixed({z2, z2, z2}, {{0, 1}});
  CHECK_THROWS_AS(check_degeneration(mixed, enumerate_ball(mixed, 2, 300)),
                  std::invalid_argument);
}

TEST_CASE("free product normalizer and tuple oracle") {
  auto z3 = VertexGroup::cyclic(3);
  const GraphSpec edgeless({z3, z3}, {});
  const SyllableWord w{{0, scalar(1)}, {0, scalar(2)}, {1, scalar(1)},
                       {1, scalar(2)}, {0, scalar(1)}};
  // 1+2 = 0 mod 3 merges away; then 1+2 at vertex 1 merges away; (0,1) stays
  const auto nf = free_product_normal_form(edgeless, w);
  CHECK(nf == std::vector<Syllable>{{0, scalar(1)}});

  const GraphSpec k2({z3, z3}, {{0, 1}});
  const NormalForm g = normalize(k2, {{1, scalar(2)}, {0, scalar(1)}});
  const auto tuple = direct_product_tuple(k2, g);
  CHECK(tuple == std::vector<VertexElement>{scalar(1), scalar(2)});
}

TEST_CASE("eigensolver validation check") {
  const CertReport r = eigensolver_validation();
  CHECK(r.pass);
  CHECK(r.metric <= 1e-10);
}

TEST_CASE("vanishing-at-infinity probe on an infinite instance") {
  // max over sphere r of exp(-phi_gamma/n) = exp(-(min phi_gamma)/n), so the
  // nonincreasing-in-r claim is the monotonicity of the sphere minima.
  auto z = VertexGroup::integers();
  const GraphSpec graph({z, VertexGroup::free_group(2)}, {});
  const PropernessProfile p = properness_profile(graph, 4, 100000);
  REQUIRE(p.monotone);
  for (int n : {1, 2, 5, 10, 100}) {
    double prev = 1.0;
    for (const SphereStat& s : p.spheres) {
      const double sphere_max = std::exp(-s.min_phi_gamma / n);
      CHECK(sphere_max <= prev + 1e-15);
      prev = sphere_max;
    }
  }
}
