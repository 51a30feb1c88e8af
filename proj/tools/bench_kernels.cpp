// Compares the serial reference kernels against their OpenMP variants and
// prints wall time plus speedup; both sides must produce identical answers.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lec/connectivity.hpp"
#include "lec/generators.hpp"
#include "lec/oracle.hpp"
#include "lec/polytope.hpp"

using namespace lec;

namespace {

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %9.3fs %9.3fs %7.2fx  %s\n", name, serial, parallel,
              serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    MultiGraph g = random_k_edge_connected(20, 3, 30, 5);
    std::vector<Rat> x(g.edge_count());
    Rng r(1);
    for (auto& v : x) v = Rat(1 + r.below(16), 16);
    double t0 = now();
    FracCut s = min_frac_cut_enum_serial(g, x);
    double t1 = now();
    FracCut p = min_frac_cut_enum_parallel(g, x);
    double t2 = now();
    row("fractional min cut (n=20)", t1 - t0, t2 - t1,
        s.value == p.value && s.side == p.side);
  }

  {
    MultiGraph g = harary(4, 10);
    FracVector x(g.edge_count());
    Rng r(2);
    for (auto& v : x) v = Rat(8 + r.below(9), 16);
    PolytopeOptions ser, par;
    ser.parallel = false;
    double t0 = now();
    MembershipVerdict a = in_integral_cover_polytope(g, x, 2, ser);
    double t1 = now();
    MembershipVerdict b = in_integral_cover_polytope(g, x, 2, par);
    double t2 = now();
    row("cover polytope scan (n=10)", t1 - t0, t2 - t1, a.ok == b.ok);
  }

  {
    MultiGraph g(6, false);
    Rng r(3);
    CostVector c;
    for (int i = 0; i < 6; ++i) {
      g.add_edge(i, (i + 1) % 6);
      c.push_back(Rat(1 + r.below(8), 1 + r.below(4)));
    }
    for (int i = 0; i < 14; ++i) {
      int u = (int)r.below(6), t = (int)r.below(5);
      g.add_edge(u, t + (t >= u ? 1 : 0));
      c.push_back(Rat(1 + r.below(8), 1 + r.below(4)));
    }
    CoverSpec spec(2, false);
    double t0 = now();
    auto s = oracle::brute_cover_serial(g, c, spec);
    double t1 = now();
    auto p = oracle::brute_cover_parallel(g, c, spec);
    double t2 = now();
    row("cover subset scan (m=20)", t1 - t0, t2 - t1,
        s.cost == p.cost && s.witness == p.witness);
  }
  return 0;
}
