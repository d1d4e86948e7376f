#pragma once

#include <vector>

namespace gpcnd {

/// Dense real matrix kept fully (both triangles); the eigensolver and the
/// checks require exact symmetry.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  double max_abs() const;
  double frobenius_norm() const;
  bool is_symmetric() const;
  bool zero_diagonal() const;

  bool operator==(const SymMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
/// Sweeps until every off-diagonal magnitude drops below 1e-12 times the
/// Frobenius norm of the input (which rotations preserve). Intended for the
/// dense sizes the verifier produces (n <= ~500). Throws on non-symmetric
/// input or failure to converge.
std::vector<double> jacobi_eigenvalues(SymMatrix m);

}  // namespace gpcnd
