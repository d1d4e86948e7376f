#pragma once

#include <string>

#include "gpcnd/ball.hpp"
#include "gpcnd/embedding.hpp"
#include "gpcnd/matrix.hpp"

namespace gpcnd {

/// Which invariant function fills the kernel matrix K_ij = f(g_j^-1 g_i).
enum class KernelFn { PhiGamma, PhiTilde, ReducedLength };

std::string kernel_fn_name(KernelFn fn);
double eval_kernel_fn(const GraphSpec& graph, KernelFn fn, const NormalForm& g);

/// Symmetric matrix K_ij = f(g_j^-1 g_i) over the ball's element list.
/// Inner loops are OpenMP-parallel; the serial_ref variants below compute
/// the same values entry for entry and back the equivalence tests and the
/// benchmark. Zero diagonal since f(e) = 0 for all three functions.
SymMatrix build_kernel_matrix(const GraphSpec& graph, const Ball& ball,
                              KernelFn fn);

/// Entrywise exp(-t * K); rejects t <= 0.
SymMatrix schoenberg_transform(const SymMatrix& k, double t);

/// P K P with the centering projector P = I - (1/n) ones. Realizes the
/// "coefficients summing to zero" restriction exactly: K is conditionally
/// negative definite iff P K P is negative semidefinite.
SymMatrix center_matrix(const SymMatrix& k);

namespace serial_ref {
SymMatrix build_kernel_matrix(const GraphSpec& graph, const Ball& ball,
                              KernelFn fn);
SymMatrix schoenberg_transform(const SymMatrix& k, double t);
SymMatrix center_matrix(const SymMatrix& k);
}  // namespace serial_ref

}  // namespace gpcnd
