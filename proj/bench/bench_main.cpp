// Serial reference vs OpenMP kernel timings. Usage: bench [repeats]
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "lowerset/discretization.hpp"
#include "lowerset/enumerate.hpp"

using namespace lowerset;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* kernel, const char* size, double serial, double parallel, bool agree) {
  std::printf("%-22s %-16s %10.4f %10.4f %7.2fx %s\n", kernel, size, serial, parallel, serial / parallel,
              agree ? "ok" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);
  std::printf("%-22s %-16s %10s %10s %8s\n", "kernel", "size", "serial_s", "parallel_s", "speedup");

  struct Cell { std::size_t d, n; };
  for (Cell c : {Cell{3, 22}, Cell{4, 18}, Cell{5, 16}, Cell{8, 12}}) {
    std::uint64_t a = 0, b = 0;
    const double s = best_of(reps, [&] { a = count_dfs_serial(c.d, c.n); });
    const double p = best_of(reps, [&] { b = count_dfs_parallel(c.d, c.n); });
    char label[32];
    std::snprintf(label, sizeof label, "d=%zu n=%zu", c.d, c.n);
    row("count_dfs", label, s, p, a == b);
  }

  struct Gram { std::size_t d, n, m; };
  for (Gram g : {Gram{2, 10, 200}, Gram{3, 9, 300}, Gram{4, 8, 300}}) {
    const auto xs = disc::sample_points(g.d, g.m, 1);
    const auto family = enumerate_lower_sets(g.d, g.n);
    disc::DiscretizationReport a, b;
    const double s = best_of(reps, [&] { a = disc::universal_constants(g.d, g.n, family, xs, false); });
    const double p = best_of(reps, [&] { b = disc::universal_constants(g.d, g.n, family, xs, true); });
    char label[32];
    std::snprintf(label, sizeof label, "d=%zu n=%zu m=%zu", g.d, g.n, g.m);
    row("gram_sweep", label, s, p, a.c1 == b.c1 && a.c2 == b.c2);
  }
}
