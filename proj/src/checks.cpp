#include "gpcnd/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gpcnd/degeneration.hpp"

namespace gpcnd {

namespace {

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void require_symmetric(const SymMatrix& m, const char* who) {
  if (!m.is_symmetric()) {
    throw std::invalid_argument(std::string(who) + ": matrix not symmetric");
  }
}

// Random element as a product of up to max_len generator syllables.
NormalForm random_element(const GraphSpec& graph, std::mt19937_64& rng,
                          int max_len) {
  std::vector<Syllable> gens;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    for (const VertexElement& g : graph.group(v).generators()) {
      gens.push_back(Syllable{v, g});
    }
  }
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  SyllableWord w;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) w.push_back(gens[pick(rng)]);
  return normalize(graph, w);
}

// Random nontrivial element of one vertex group.
VertexElement random_vertex_element(const VertexGroup& vg,
                                    std::mt19937_64& rng) {
  switch (vg.kind()) {
    case GroupKind::CyclicFinite: {
      std::uniform_int_distribution<std::int64_t> d(1, vg.param() - 1);
      return VertexElement{d(rng), {}};
    }
    case GroupKind::Integers: {
      std::uniform_int_distribution<std::int64_t> d(1, 8);
      std::bernoulli_distribution flip;
      const std::int64_t n = d(rng);
      return VertexElement{flip(rng) ? -n : n, {}};
    }
    case GroupKind::FreeGroup: {
      std::uniform_int_distribution<int> len(1, 4);
      std::uniform_int_distribution<std::int32_t> gen(1, vg.param());
      std::bernoulli_distribution flip;
      VertexElement e;
      const int target = len(rng);
      while (static_cast<int>(e.letters.size()) < target) {
        std::int32_t x = gen(rng);
        if (flip(rng)) x = -x;
        if (!e.letters.empty() && e.letters.back() == -x) continue;
        e.letters.push_back(x);
      }
      return e;
    }
  }
  return {};
}

}  // namespace

CertReport check_psd(const SymMatrix& m, double tol, const std::string& name) {
  require_symmetric(m, "check_psd");
  Timer timer;
  CertReport report;
  report.name = name;
  report.size = m.size();
  report.tolerance = tol;
  const auto eig = jacobi_eigenvalues(m);
  report.metric = eig.empty() ? 0.0 : eig.front();  // min eigenvalue
  report.pass = report.metric >= -tol * (1.0 + m.max_abs());
  report.ms = timer.ms();
  return report;
}

CertReport check_cnd(const SymMatrix& m, double tol, const std::string& name) {
  require_symmetric(m, "check_cnd");
  Timer timer;
  CertReport report;
  report.name = name;
  report.size = m.size();
  report.tolerance = tol;
  const auto eig = jacobi_eigenvalues(center_matrix(m));
  report.metric = eig.empty() ? 0.0 : eig.back();  // max centered eigenvalue
  report.pass = report.metric <= tol * (1.0 + m.max_abs());
  report.ms = timer.ms();
  return report;
}

std::vector<CertReport> check_schoenberg(const SymMatrix& m,
                                         const std::vector<double>& t_list,
                                         double tol) {
  require_symmetric(m, "check_schoenberg");
  if (t_list.empty()) {
    throw std::invalid_argument("check_schoenberg: empty t list");
  }
  std::vector<CertReport> reports;
  reports.reserve(t_list.size());
  for (double t : t_list) {
    std::ostringstream name;
    name << "schoenberg[t=" << t << "]";
    reports.push_back(check_psd(schoenberg_transform(m, t), tol, name.str()));
  }
  return reports;
}

CertReport check_invariance(const GraphSpec& graph, int samples,
                            std::uint64_t seed) {
  Timer timer;
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const NormalForm f = random_element(graph, rng, 6);
    const NormalForm g = random_element(graph, rng, 6);
    const NormalForm h = random_element(graph, rng, 6);
    const double lhs = embedding_kernel(graph, multiply(graph, f, g),
                                        multiply(graph, f, h));
    const double rhs = embedding_kernel(graph, g, h);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  CertReport report;
  report.name = "invariance";
  report.size = samples;
  report.metric = worst;
  report.tolerance = 1e-10;
  report.pass = worst <= 1e-10;
  report.seed = seed;
  report.ms = timer.ms();
  return report;
}

CertReport check_kernel_identity(const GraphSpec& graph, int samples,
                                 std::uint64_t seed) {
  Timer timer;
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const NormalForm g = random_element(graph, rng, 6);
    const NormalForm h = random_element(graph, rng, 6);
    const double lhs = embedding_kernel(graph, g, h);
    const double rhs =
        phi_tilde(graph, multiply(graph, inverse(graph, h), g));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  CertReport report;
  report.name = "kernel_identity";
  report.size = samples;
  report.metric = worst;
  report.tolerance = 1e-10;
  report.pass = worst <= 1e-10;
  report.seed = seed;
  report.ms = timer.ms();
  return report;
}

CertReport check_restriction(const GraphSpec& graph, int samples,
                             std::uint64_t seed) {
  Timer timer;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_vertex(0, graph.vertex_count() - 1);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const int v = pick_vertex(rng);
    const VertexGroup& vg = graph.group(v);
    const VertexElement a = random_vertex_element(vg, rng);
    const NormalForm g = normalize(graph, {Syllable{v, a}});
    const double expected = 1.0 + vg.phi(a);
    worst = std::max(worst, std::abs(phi_gamma(graph, g) - expected));
  }
  CertReport report;
  report.name = "restriction_identity";
  report.size = samples;
  report.metric = worst;
  report.tolerance = 0.0;  // exact
  report.pass = worst == 0.0;
  report.seed = seed;
  report.ms = timer.ms();
  return report;
}

CertReport check_pointwise_limit(const GraphSpec& graph, const Ball& ball,
                                 const std::vector<int>& n_list) {
  if (n_list.empty()) {
    throw std::invalid_argument("check_pointwise_limit: empty n list");
  }
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) {
      throw std::invalid_argument(
          "check_pointwise_limit: n list must be increasing");
    }
  }
  Timer timer;
  const int n_max = n_list.back();
  bool ok = true;
  double min_final = 1.0;
  for (const NormalForm& g : ball.elements) {
    const double phi = phi_gamma(graph, g);
    double prev = 0.0;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
      const double value = std::exp(-phi / n_list[i]);
      if (i > 0 && value < prev) ok = false;  // exp(-phi/n) grows with n
      prev = value;
    }
    const double eps = phi / n_max + 1e-12;
    if (prev < 1.0 - eps) ok = false;
    min_final = std::min(min_final, prev);
  }
  CertReport report;
  report.name = "pointwise_limit";
  report.size = static_cast<int>(ball.size());
  report.metric = min_final;
  report.tolerance = 1e-12;
  report.pass = ok;
  report.ms = timer.ms();
  report.notes = "min exp(-phi/n) at n=" + std::to_string(n_max);
  return report;
}

PropernessProfile properness_profile(const GraphSpec& graph, int radius_max,
                                     std::size_t cap) {
  if (radius_max < 1) {
    throw std::invalid_argument("properness_profile: radius_max must be >= 1");
  }
  const Ball ball = enumerate_ball(graph, radius_max, cap);
  PropernessProfile profile;
  profile.truncated = ball.truncated;
  const auto spheres = ball.spheres();
  double prev_min = -1.0;
  for (int r = 0; r <= radius_max; ++r) {
    const auto& idx = spheres[static_cast<std::size_t>(r)];
    if (idx.empty()) continue;  // finite group exhausted
    double min_phi = std::numeric_limits<double>::infinity();
    for (std::size_t i : idx) {
      min_phi = std::min(min_phi, phi_gamma(graph, ball.elements[i]));
    }
    if (r > 0) {
      if (prev_min >= 0.0 && min_phi < prev_min) profile.monotone = false;
      profile.spheres.push_back(SphereStat{r, min_phi, idx.size()});
      prev_min = min_phi;
    }
  }
  return profile;
}

CertReport check_properness(const GraphSpec& graph, int radius_max,
                            std::size_t cap) {
  Timer timer;
  const PropernessProfile profile = properness_profile(graph, radius_max, cap);
  CertReport report;
  report.name = "properness_profile";
  report.size = static_cast<int>(profile.spheres.size());
  report.metric =
      profile.spheres.empty() ? 0.0 : profile.spheres.back().min_phi_gamma;
  report.tolerance = 0.0;
  report.pass = profile.monotone;
  report.ms = timer.ms();
  std::string notes = "sphere minima:";
  for (const SphereStat& s : profile.spheres) {
    notes += " r" + std::to_string(s.radius) + "=" +
             std::to_string(s.min_phi_gamma);
  }
  if (profile.truncated) notes += " (truncated)";
  report.notes = notes;
  return report;
}

CertReport check_degeneration(const GraphSpec& graph, const Ball& ball) {
  Timer timer;
  CertReport report;
  report.name = "degeneration";
  report.size = static_cast<int>(ball.size());
  report.tolerance = 0.0;

  const bool single = graph.vertex_count() == 1;
  if (!single && !graph.edgeless() && !graph.complete()) {
    throw std::invalid_argument(
        "check_degeneration: graph is neither edgeless nor complete");
  }

  std::size_t mismatches = 0;
  if (single) {
    // One vertex: the product is the vertex group itself and phi_gamma
    // restricts to 1 + phi_v off the identity.
    const VertexGroup& vg = graph.group(0);
    for (const NormalForm& g : ball.elements) {
      if (g.is_identity()) {
        if (phi_gamma(graph, g) != 0.0) ++mismatches;
        continue;
      }
      if (g.length() != 1 ||
          phi_gamma(graph, g) != 1.0 + vg.phi(g.syllables[0].element)) {
        ++mismatches;
      }
    }
    report.notes = "single vertex: phi_gamma = 1 + phi_v";
  } else if (graph.edgeless()) {
    // Free product: canonical forms must agree with the stack normalizer,
    // letter for letter, and so must sampled pair products.
    for (const NormalForm& g : ball.elements) {
      const auto oracle = free_product_normal_form(graph, g.syllables);
      if (oracle != g.syllables) ++mismatches;
      for (std::size_t i = 1; i < g.syllables.size(); ++i) {
        if (g.syllables[i].vertex == g.syllables[i - 1].vertex) ++mismatches;
      }
    }
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    const std::size_t pair_samples = std::min<std::size_t>(
        2000, ball.size() * ball.size());
    for (std::size_t i = 0; i < pair_samples; ++i) {
      const NormalForm& g = ball.elements[pick(rng)];
      const NormalForm& h = ball.elements[pick(rng)];
      SyllableWord concat = g.syllables;
      concat.insert(concat.end(), h.syllables.begin(), h.syllables.end());
      if (free_product_normal_form(graph, concat) !=
          multiply(graph, g, h).syllables) {
        ++mismatches;
      }
    }
    report.seed = 12345;
    report.notes = "free product normalizer";
  } else {
    // Complete graph: elements biject with component tuples and products
    // act componentwise.
    std::set<std::vector<VertexElement>> tuples;
    for (const NormalForm& g : ball.elements) {
      for (std::size_t i = 1; i < g.syllables.size(); ++i) {
        if (g.syllables[i].vertex <= g.syllables[i - 1].vertex) ++mismatches;
      }
      if (!tuples.insert(direct_product_tuple(graph, g)).second) {
        ++mismatches;  // two elements, one tuple
      }
    }
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
    const std::size_t pair_samples = std::min<std::size_t>(
        2000, ball.size() * ball.size());
    for (std::size_t i = 0; i < pair_samples; ++i) {
      const NormalForm& g = ball.elements[pick(rng)];
      const NormalForm& h = ball.elements[pick(rng)];
      const auto tg = direct_product_tuple(graph, g);
      const auto th = direct_product_tuple(graph, h);
      std::vector<VertexElement> expected(tg.size());
      for (int v = 0; v < graph.vertex_count(); ++v) {
        expected[static_cast<std::size_t>(v)] = graph.group(v).multiply(
            tg[static_cast<std::size_t>(v)], th[static_cast<std::size_t>(v)]);
      }
      if (direct_product_tuple(graph, multiply(graph, g, h)) != expected) {
        ++mismatches;
      }
    }
    report.seed = 12345;
    report.notes = "direct product tuple arithmetic";
  }

  report.metric = static_cast<double>(mismatches);
  report.pass = mismatches == 0;
  report.ms = timer.ms();
  return report;
}

CertReport eigensolver_validation() {
  Timer timer;
  double worst = 0.0;
  auto compare = [&](const SymMatrix& m, std::vector<double> expected) {
    std::sort(expected.begin(), expected.end());
    const auto got = jacobi_eigenvalues(m);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      worst = std::max(worst, std::abs(got[i] - expected[i]));
    }
  };

  {
    SymMatrix d(5);
    const double diag[5] = {-3.0, 0.0, 2.0, 7.0, 1e-3};
    for (int i = 0; i < 5; ++i) d(i, i) = diag[i];
    compare(d, {-3.0, 0.0, 2.0, 7.0, 1e-3});
  }
  {
    SymMatrix m(2);
    m(0, 1) = m(1, 0) = 1.0;
    compare(m, {-1.0, 1.0});
  }
  {
    // exp(-t K) for K the 2x2 zero-diagonal flip, t = 1.
    SymMatrix m(2);
    m(0, 0) = m(1, 1) = 1.0;
    m(0, 1) = m(1, 0) = std::exp(-1.0);
    compare(m, {1.0 - std::exp(-1.0), 1.0 + std::exp(-1.0)});
  }
  {
    // Rank-1 outer product vv^T, v = (1,2,3,4): spectrum {|v|^2, 0, 0, 0}.
    const double v[4] = {1.0, 2.0, 3.0, 4.0};
    SymMatrix m(4);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) m(i, j) = v[i] * v[j];
    }
    compare(m, {30.0, 0.0, 0.0, 0.0});
  }

  CertReport report;
  report.name = "eigensolver_validation";
  report.size = 4;
  report.metric = worst;
  report.tolerance = 1e-10;
  report.pass = worst <= 1e-10;
  report.ms = timer.ms();
  report.notes = "known spectra: diagonal, 2x2 closed forms, rank-1";
  return report;
}

}  // namespace gpcnd
