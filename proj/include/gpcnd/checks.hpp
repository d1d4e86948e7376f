#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpcnd/ball.hpp"
#include "gpcnd/kernels.hpp"
#include "gpcnd/matrix.hpp"

namespace gpcnd {

/// Outcome of one numerical certification: pass holds exactly when the
/// stated eigenvalue or deviation bound does.
struct CertReport {
  std::string name;
  std::string instance;
  int size = 0;          // matrix dimension or sample count
  double metric = 0.0;   // the relevant eigenvalue / max deviation
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;  // 0 when the check draws no samples
  double ms = 0.0;
  std::string notes;
};

/// Positive semidefiniteness: min eigenvalue >= -tol * (1 + max |M_ij|).
CertReport check_psd(const SymMatrix& m, double tol,
                     const std::string& name = "psd");

/// Conditional negative definiteness, tested as negative semidefiniteness
/// of the centered matrix: max eigenvalue of PMP <= tol * (1 + max |M_ij|).
CertReport check_cnd(const SymMatrix& m, double tol,
                     const std::string& name = "cnd");

/// One PSD certificate per t: the entrywise exponential exp(-t M) must be
/// positive semidefinite whenever M is CND with zero diagonal.
std::vector<CertReport> check_schoenberg(const SymMatrix& m,
                                         const std::vector<double>& t_list,
                                         double tol);

/// Left-invariance of the embedding kernel on seeded random triples
/// (f, g, h) of word length <= 6: k(fg, fh) = k(g, h) within 1e-10.
CertReport check_invariance(const GraphSpec& graph, int samples,
                            std::uint64_t seed);

/// k(g, h) = phi_tilde(h^-1 g) on seeded random pairs, within 1e-10.
CertReport check_kernel_identity(const GraphSpec& graph, int samples,
                                 std::uint64_t seed);

/// phi_gamma restricted to a vertex group is 1 + phi_v, exactly, on sampled
/// nontrivial vertex-group elements.
CertReport check_restriction(const GraphSpec& graph, int samples,
                             std::uint64_t seed);

/// For every ball element, exp(-phi_gamma(g)/n) must be nondecreasing over
/// n_list (strictly increasing n_list required) and land within
/// phi_gamma(g)/n_max + 1e-12 of 1 at the final n. Metric: min value at
/// n_max over the ball.
CertReport check_pointwise_limit(const GraphSpec& graph, const Ball& ball,
                                 const std::vector<int>& n_list);

struct SphereStat {
  int radius = 0;
  double min_phi_gamma = 0.0;
  std::size_t count = 0;
};

/// Minimum of phi_gamma on each nonempty sphere of the enumerated range.
/// `monotone` records whether the minima are nondecreasing in the radius --
/// the finite-range face of properness. Spheres a finite group never
/// reaches are simply absent.
struct PropernessProfile {
  std::vector<SphereStat> spheres;
  bool monotone = true;
  bool truncated = false;
};

PropernessProfile properness_profile(const GraphSpec& graph, int radius_max,
                                     std::size_t cap);
CertReport check_properness(const GraphSpec& graph, int radius_max,
                            std::size_t cap);

/// Edgeless graphs: every ball element must agree with the independent
/// free-product normalizer (alternating vertices, matching length), and
/// sampled products must too. Complete graphs: elements must biject with
/// component tuples and multiplication must match componentwise arithmetic.
/// Mixed graphs are rejected.
CertReport check_degeneration(const GraphSpec& graph, const Ball& ball);

/// Jacobi eigensolver against known spectra: diagonal matrices, 2x2 closed
/// forms, and a rank-1 outer product, all to 1e-10.
CertReport eigensolver_validation();

}  // namespace gpcnd
