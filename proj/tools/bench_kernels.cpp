// Benchmark comparing the OpenMP kernels against the serial reference
// implementations on a ball of configurable size. Values are asserted equal
// entry for entry before any timing is reported.

#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>

#include "gpcnd/ball.hpp"
#include "gpcnd/kernels.hpp"
#include "gpcnd/matrix.hpp"
#include "gpcnd/suite.hpp"

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const double t0 = now_ms();
    f();
    best = std::min(best, now_ms() - t0);
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("  %-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n",
              name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int radius = 4;
  std::size_t cap = 300;
  int reps = 3;
  if (argc > 1) radius = std::atoi(argv[1]);
  if (argc > 2) cap = static_cast<std::size_t>(std::atoll(argv[2]));
  if (argc > 3) reps = std::atoi(argv[3]);

#ifdef _OPENMP
  std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not enabled in this build\n");
#endif

  for (const auto& [name, config] : gpcnd::standard_suite()) {
    const gpcnd::GraphSpec graph = config.graph();
    const gpcnd::Ball ball = gpcnd::enumerate_ball(graph, radius, cap);
    std::printf("%s: %zu elements (radius %d%s)\n", name.c_str(), ball.size(),
                radius, ball.truncated ? ", truncated" : "");

    const gpcnd::SymMatrix serial_k = gpcnd::serial_ref::build_kernel_matrix(
        graph, ball, gpcnd::KernelFn::PhiGamma);
    const gpcnd::SymMatrix parallel_k =
        gpcnd::build_kernel_matrix(graph, ball, gpcnd::KernelFn::PhiGamma);
    if (!(serial_k == parallel_k)) {
      std::fprintf(stderr, "FATAL: serial and parallel matrices differ\n");
      return 1;
    }

    const double t_build_serial = time_best_of(reps, [&] {
      (void)gpcnd::serial_ref::build_kernel_matrix(graph, ball,
                                                   gpcnd::KernelFn::PhiGamma);
    });
    const double t_build_parallel = time_best_of(reps, [&] {
      (void)gpcnd::build_kernel_matrix(graph, ball, gpcnd::KernelFn::PhiGamma);
    });
    report("build_kernel_matrix", t_build_serial, t_build_parallel);

    const double t_schoenberg_serial = time_best_of(reps, [&] {
      (void)gpcnd::serial_ref::schoenberg_transform(serial_k, 0.5);
    });
    const double t_schoenberg_parallel = time_best_of(
        reps, [&] { (void)gpcnd::schoenberg_transform(serial_k, 0.5); });
    report("schoenberg_transform", t_schoenberg_serial, t_schoenberg_parallel);

    const double t_center_serial = time_best_of(
        reps, [&] { (void)gpcnd::serial_ref::center_matrix(serial_k); });
    const double t_center_parallel =
        time_best_of(reps, [&] { (void)gpcnd::center_matrix(serial_k); });
    report("center_matrix", t_center_serial, t_center_parallel);
  }
  return 0;
}
