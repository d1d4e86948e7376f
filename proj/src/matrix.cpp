#include "gpcnd/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpcnd {

double SymMatrix::max_abs() const {
  double m = 0.0;
  for (double x : a_) m = std::max(m, std::abs(x));
  return m;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

bool SymMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool SymMatrix::zero_diagonal() const {
  for (int i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0.0) return false;
  }
  return true;
}

std::vector<double> jacobi_eigenvalues(SymMatrix m) {
  if (!m.is_symmetric()) {
    throw std::invalid_argument("jacobi_eigenvalues: matrix not symmetric");
  }
  const int n = m.size();
  std::vector<double> eig(static_cast<std::size_t>(n));
  if (n == 0) return eig;

  // Rotations preserve the Frobenius norm, so the threshold is fixed once.
  const double threshold = 1e-12 * m.frobenius_norm();

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off_max = 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        off_max = std::max(off_max, std::abs(m(p, q)));
      }
    }
    if (off_max <= threshold) {
      for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = m(i, i);
      std::sort(eig.begin(), eig.end());
      return eig;
    }

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double h = t * apq;
        m(p, p) -= h;
        m(q, q) += h;
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = m(i, p);
          const double aiq = m(i, q);
          m(i, p) = aip - s * (aiq + tau * aip);
          m(p, i) = m(i, p);
          m(i, q) = aiq + s * (aip - tau * aiq);
          m(q, i) = m(i, q);
        }
      }
    }
  }
  throw std::runtime_error("jacobi_eigenvalues: no convergence in 100 sweeps");
}

}  // namespace gpcnd
