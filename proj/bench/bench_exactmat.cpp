// Times the serial reference kernels against the OpenMP ones on the matrix
// shapes this project actually produces: dense random rational matrices and
// Veronese evaluation matrices of seeded point configurations. Results must
// agree exactly; the harness checks that while timing.

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "curvesing/exactmat.hpp"
#include "curvesing/pointset.hpp"

using namespace curvesing;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                        long long box, long long dens) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const long long num = static_cast<long long>(rng() % (2 * box + 1)) - box;
      const long long den = 1 + static_cast<long long>(rng() % dens);
      m.at(i, j) = rat_frac(num, den);
    }
  return m;
}

struct Timing {
  double serial_ms = 0;
  double parallel_ms = 0;
};

template <typename F>
double time_ms(F&& f) {
  const double t0 = omp_get_wtime();
  f();
  return (omp_get_wtime() - t0) * 1e3;
}

void report(const char* name, const Timing& t) {
  std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name, t.serial_ms, t.parallel_ms,
              t.serial_ms / t.parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 1;
  if (scale < 1) scale = 1;
  std::printf("threads: %d   (argv[1] scales the sizes; current scale %d)\n",
              omp_get_max_threads(), scale);
  std::printf("%-34s %13s %13s %9s\n", "case", "serial", "openmp", "speedup");

  std::mt19937_64 rng(42);

  {
    const std::size_t n = 48 * static_cast<std::size_t>(scale);
    RatMatrix m = random_matrix(rng, n, n + 16, 50, 9);
    RrefResult rs, rp;
    Timing t;
    t.serial_ms = time_ms([&] { rs = rref(m, ExecPolicy::Serial); });
    t.parallel_ms = time_ms([&] { rp = rref(m, ExecPolicy::Parallel); });
    if (!(rs.matrix == rp.matrix) || rs.pivots != rp.pivots) {
      std::fprintf(stderr, "kernel mismatch in rref\n");
      return 1;
    }
    report("rref random rational", t);
  }

  {
    const std::size_t n = 64 * static_cast<std::size_t>(scale);
    RatMatrix m = random_matrix(rng, n, n, 1000, 99);
    std::size_t r1 = 0, r2 = 0;
    Timing t;
    t.serial_ms = time_ms([&] { r1 = rank(m, ExecPolicy::Serial); });
    t.parallel_ms = time_ms([&] { r2 = rank(m, ExecPolicy::Parallel); });
    if (r1 != r2) {
      std::fprintf(stderr, "kernel mismatch in rank\n");
      return 1;
    }
    report("rank dense rational", t);
  }

  {
    // evaluation matrix of a big seeded configuration, degree 3
    auto g = random_config(6, 48 * scale > 56 ? 56 : 48 * scale, 7, 25);
    RatMatrix v = veronese_matrix(g, 3);
    std::size_t r1 = 0, r2 = 0;
    Timing t;
    t.serial_ms = time_ms([&] { r1 = rank(v, ExecPolicy::Serial); });
    t.parallel_ms = time_ms([&] { r2 = rank(v, ExecPolicy::Parallel); });
    if (r1 != r2) {
      std::fprintf(stderr, "kernel mismatch on veronese\n");
      return 1;
    }
    report("rank veronese (deg 3)", t);
  }

  {
    auto g = random_config(6, 21, 1, 10);
    RatMatrix v = veronese_matrix(g, 4).transpose();
    RatMatrix n1, n2;
    Timing t;
    t.serial_ms = time_ms([&] { n1 = nullspace(v, ExecPolicy::Serial); });
    t.parallel_ms = time_ms([&] { n2 = nullspace(v, ExecPolicy::Parallel); });
    if (!(n1 == n2)) {
      std::fprintf(stderr, "kernel mismatch in nullspace\n");
      return 1;
    }
    report("nullspace veronese^t (deg 4)", t);
  }

  return 0;
}
