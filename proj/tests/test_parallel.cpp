#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lec/connectivity.hpp"
#include "lec/generators.hpp"
#include "lec/oracle.hpp"
#include "lec/polytope.hpp"

using namespace lec;

namespace {

MultiGraph random_graph(Rng& r, int n, int m, bool directed) {
  MultiGraph g(n, directed);
  for (int i = 0; i < m; ++i) {
    int u = (int)r.below(n), t = (int)r.below(n - 1);
    g.add_edge(u, t + (t >= u ? 1 : 0));
  }
  return g;
}

}  // namespace

TEST_CASE("fractional cut kernels agree, value and witness") {
  Rng r(404);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 2 + (int)r.below(9);
    int m = 1 + (int)r.below(2 * n);
    MultiGraph g = random_graph(r, n, m, false);
    std::vector<Rat> x(m);
    for (int e = 0; e < m; ++e) x[e] = Rat(r.below(9), 8);
    FracCut s = min_frac_cut_enum_serial(g, x);
    FracCut p = min_frac_cut_enum_parallel(g, x);
    CHECK(s.value == p.value);
    CHECK(s.side == p.side);
  }
}

TEST_CASE("fractional cut kernels agree on a larger instance") {
  MultiGraph g = random_k_edge_connected(16, 3, 20, 9);
  std::vector<Rat> x(g.edge_count());
  Rng r(10);
  for (auto& v : x) v = Rat(r.below(17), 16);
  FracCut s = min_frac_cut_enum_serial(g, x);
  FracCut p = min_frac_cut_enum_parallel(g, x);
  CHECK(s.value == p.value);
  CHECK(s.side == p.side);
}

TEST_CASE("polytope scan agrees across thread modes") {
  Rng r(77);
  for (int iter = 0; iter < 12; ++iter) {
    int n = 3 + (int)r.below(4);
    MultiGraph g(n, false);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    FracVector x(g.edge_count());
    for (auto& v : x) v = Rat(r.below(5), 4);
    PolytopeOptions par, ser;
    ser.parallel = false;
    for (int ell = 1; ell <= 2; ++ell) {
      MembershipVerdict a = in_integral_cover_polytope(g, x, ell, par);
      MembershipVerdict b = in_integral_cover_polytope(g, x, ell, ser);
      CHECK(a.ok == b.ok);
      if (!a.ok) {
        // Deterministic first violation, independent of thread count.
        CHECK(a.violation->s == b.violation->s);
        CHECK(a.violation->f == b.violation->f);
        CHECK(a.violation->lhs == b.violation->lhs);
      }
    }
  }
}

TEST_CASE("cover oracle scans agree, value and witness") {
  Rng r(505);
  int done = 0;
  while (done < 15) {
    int n = 2 + (int)r.below(4);
    int m = 6 + (int)r.below(10);
    MultiGraph g = random_graph(r, n, m, done % 2 == 0);
    int ell = 1 + (int)r.below(2);
    CoverSpec spec(ell, g.directed());
    bool feasible = true;
    for (int v = 0; v < n; ++v)
      feasible = feasible && (g.directed()
                                  ? g.out_degree(v) >= ell && g.in_degree(v) >= ell
                                  : g.degree(v) >= ell);
    if (!feasible) continue;
    ++done;
    CostVector c(m);
    for (int e = 0; e < m; ++e) c[e] = Rat(r.below(6), 1 + r.below(4));
    auto s = oracle::brute_cover_serial(g, c, spec);
    auto p = oracle::brute_cover_parallel(g, c, spec);
    CHECK(s.cost == p.cost);
    CHECK(s.witness == p.witness);
  }
}
