// Compares the serial and OpenMP fraction-free rank kernels on
// interpolation matrices of growing size and checks they agree.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "seshadri/linalg.hpp"
#include "seshadri/linsys.hpp"

using namespace seshadri;

namespace {

template <typename F>
double time_once(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  long max_degree = argc > 1 ? std::atol(argv[1]) : 16;
  std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;

  std::printf("threads=%d\n", omp_get_max_threads());
  std::printf("%8s %8s %8s %12s %12s %8s\n", "degree", "rows", "cols",
              "serial[s]", "omp[s]", "speedup");

  for (long d = 4; d <= max_degree; d += 4) {
    // L(d; m^r) with multiplicity 2 at enough points to keep the matrix
    // roughly square.
    long cols = monomial_count(d);
    long r = cols / 3;
    LinearSystem2D sys;
    sys.degree = d;
    sys.mults.assign(r, 2);

    // Sample the points once so both kernels see the same matrix.
    std::vector<std::pair<Rat, Rat>> pts;
    {
      std::uint64_t state = mix_seed(seed, static_cast<std::uint64_t>(d));
      while (pts.size() < static_cast<std::size_t>(r)) {
        long x = static_cast<long>(splitmix64(state) % 2001) - 1000;
        long y = static_cast<long>(splitmix64(state) % 2001) - 1000;
        pts.emplace_back(Rat(x), Rat(y));
      }
    }
    IMatrix m = conditions_matrix(d, sys.mults, pts);

    std::size_t rank_s = 0, rank_p = 0;
    double ts = time_once([&] { rank_s = rank_serial(m); });
    double tp = time_once([&] { rank_p = rank_parallel(m); });
    if (rank_s != rank_p) {
      std::fprintf(stderr, "rank mismatch: serial %zu vs parallel %zu\n",
                   rank_s, rank_p);
      return 1;
    }
    std::printf("%8ld %8zu %8zu %12.4f %12.4f %8.2f\n", d, m.rows(), m.cols(),
                ts, tp, ts / tp);
  }
  return 0;
}
