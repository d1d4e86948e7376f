#include "gpcnd/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gpcnd {

std::string kernel_fn_name(KernelFn fn) {
  switch (fn) {
    case KernelFn::PhiGamma: return "phi_gamma";
    case KernelFn::PhiTilde: return "phi_tilde";
    case KernelFn::ReducedLength: return "reduced_length";
  }
  return "?";
}

double eval_kernel_fn(const GraphSpec& graph, KernelFn fn,
                      const NormalForm& g) {
  switch (fn) {
    case KernelFn::PhiGamma: return phi_gamma(graph, g);
    case KernelFn::PhiTilde: return phi_tilde(graph, g);
    case KernelFn::ReducedLength: return static_cast<double>(reduced_length(g));
  }
  return 0.0;
}

namespace {

std::vector<NormalForm> all_inverses(const GraphSpec& graph,
                                     const Ball& ball) {
  std::vector<NormalForm> inv(ball.elements.size());
  for (std::size_t j = 0; j < ball.elements.size(); ++j) {
    inv[j] = inverse(graph, ball.elements[j]);
  }
  return inv;
}

void require_positive_t(double t) {
  if (!(t > 0.0)) {
    throw std::invalid_argument("schoenberg_transform: t must be positive");
  }
}

}  // namespace

// All three functions are symmetric (f(g) = f(g^-1)), so only the upper
// triangle is evaluated and the lower is mirrored. Entries are independent;
// rows are dealt out dynamically since row i carries n-i entries.
SymMatrix build_kernel_matrix(const GraphSpec& graph, const Ball& ball,
                              KernelFn fn) {
  const int n = static_cast<int>(ball.size());
  SymMatrix k(n);
  const std::vector<NormalForm> inv = all_inverses(graph, ball);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const NormalForm diff =
          multiply(graph, inv[static_cast<std::size_t>(j)],
                   ball.elements[static_cast<std::size_t>(i)]);
      const double value = eval_kernel_fn(graph, fn, diff);
      k(i, j) = value;
      k(j, i) = value;
    }
  }
  return k;
}

SymMatrix schoenberg_transform(const SymMatrix& k, double t) {
  require_positive_t(t);
  const int n = k.size();
  SymMatrix r(n);
#pragma omp parallel for
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      r(i, j) = std::exp(-t * k(i, j));
    }
  }
  return r;
}

SymMatrix center_matrix(const SymMatrix& k) {
  const int n = k.size();
  SymMatrix c(n);
  if (n == 0) return c;
  std::vector<double> row_mean(static_cast<std::size_t>(n), 0.0);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += k(i, j);
    row_mean[static_cast<std::size_t>(i)] = s / n;
    total += s;
  }
  const double mean = total / (static_cast<double>(n) * n);
#pragma omp parallel for
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // (PKP)_ij = K_ij - rowmean_i - rowmean_j + mean; the same four terms
      // appear at (j,i), so symmetry survives exactly.
      c(i, j) = k(i, j) - row_mean[static_cast<std::size_t>(i)] -
                row_mean[static_cast<std::size_t>(j)] + mean;
    }
  }
  return c;
}

namespace serial_ref {

SymMatrix build_kernel_matrix(const GraphSpec& graph, const Ball& ball,
                              KernelFn fn) {
  const int n = static_cast<int>(ball.size());
  SymMatrix k(n);
  const std::vector<NormalForm> inv = all_inverses(graph, ball);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const NormalForm diff =
          multiply(graph, inv[static_cast<std::size_t>(j)],
                   ball.elements[static_cast<std::size_t>(i)]);
      const double value = eval_kernel_fn(graph, fn, diff);
      k(i, j) = value;
      k(j, i) = value;
    }
  }
  return k;
}

SymMatrix schoenberg_transform(const SymMatrix& k, double t) {
  require_positive_t(t);
  const int n = k.size();
  SymMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      r(i, j) = std::exp(-t * k(i, j));
    }
  }
  return r;
}

SymMatrix center_matrix(const SymMatrix& k) {
  const int n = k.size();
  SymMatrix c(n);
  if (n == 0) return c;
  std::vector<double> row_mean(static_cast<std::size_t>(n), 0.0);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += k(i, j);
    row_mean[static_cast<std::size_t>(i)] = s / n;
    total += s;
  }
  const double mean = total / (static_cast<double>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      c(i, j) = k(i, j) - row_mean[static_cast<std::size_t>(i)] -
                row_mean[static_cast<std::size_t>(j)] + mean;
    }
  }
  return c;
}

}  // namespace serial_ref

}  // namespace gpcnd
