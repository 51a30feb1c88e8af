#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lec/edge_cover.hpp"
#include "lec/graph.hpp"

using namespace lec;

namespace {

MultiGraph triangle() {
  MultiGraph g(3, false);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  return g;
}

MultiGraph path3() {
  MultiGraph g(3, false);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

// Deterministic small random graphs for property checks.
struct Lcg {
  std::uint64_t s;
  unsigned next(unsigned bound) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return (unsigned)((s >> 33) % bound);
  }
};

MultiGraph random_graph(Lcg& r, int n, int m, bool directed) {
  MultiGraph g(n, directed);
  for (int i = 0; i < m; ++i) {
    int u = (int)r.next(n), t = (int)r.next(n - 1);
    g.add_edge(u, t + (t >= u ? 1 : 0));
  }
  return g;
}

}  // namespace

TEST_CASE("construction rules") {
  MultiGraph g(3, false);
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  g.add_edge(2, 1);  // canonical storage tail <= head
  CHECK(g.edge(0).tail == 1);
  CHECK(g.edge(0).head == 2);
  g.add_edge(1, 2);  // parallel edges are first-class
  CHECK(g.edge_count() == 2);
}

TEST_CASE("delta basics") {
  MultiGraph p = path3();
  CHECK(delta(p, 0b010).count() == 2);
  CHECK(delta(triangle(), 0b001).count() == 2);
  CHECK(delta(triangle(), 0b111).count() == 0);
  CHECK_THROWS_AS(delta(p, 0b1000), std::out_of_range);
}

TEST_CASE("delta directed modes") {
  MultiGraph g(3, true);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  CHECK(delta(g, 0b001, CutSide::All).count() == 2);
  CHECK(delta(g, 0b001, CutSide::Leaving).count() == 1);
  CHECK(delta(g, 0b001, CutSide::Entering).count() == 1);
}

TEST_CASE("zeta") {
  CHECK(zeta(triangle(), 0b111).count() == 3);  // zeta(V) = E
  CHECK(zeta(triangle(), 0b001).count() == 2);
  CHECK(zeta(path3(), 0b001).count() == 1);
}

TEST_CASE("bipartite double") {
  MultiGraph c(3, true);
  c.add_edge(0, 1);
  c.add_edge(1, 2);
  c.add_edge(2, 0);
  MultiGraph d = bipartite_double(c);
  CHECK(d.node_count() == 6);
  CHECK(d.edge_count() == 3);
  CHECK_FALSE(d.directed());
  for (int v = 0; v < 6; ++v) CHECK(d.degree(v) == 1);
  CHECK(d.edge(0).tail == 0);
  CHECK(d.edge(0).head == 4);  // 1'

  MultiGraph one(2, true);
  one.add_edge(0, 1);
  MultiGraph done = bipartite_double(one);
  CHECK(done.edge_count() == 1);
  CHECK(done.edge(0).tail == 0);
  CHECK(done.edge(0).head == 3);

  CHECK_THROWS_AS(bipartite_double(triangle()), std::invalid_argument);
}

TEST_CASE("double preserves degrees and cover property") {
  Lcg r{7};
  for (int iter = 0; iter < 25; ++iter) {
    int n = 2 + (int)r.next(4);
    int m = 1 + (int)r.next(8);
    MultiGraph g = random_graph(r, n, m, true);
    MultiGraph d = bipartite_double(g);
    for (int v = 0; v < n; ++v) {
      CHECK(d.degree(v) == g.out_degree(v));
      CHECK(d.degree(v + n) == g.in_degree(v));
    }
    // Cover correspondence, exhaustively over subsets and ell.
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      EdgeSet s(m);
      for (int e = 0; e < m; ++e)
        if ((mask >> e) & 1) s.add(e);
      for (int ell = 0; ell <= 2; ++ell) {
        bool in_g = is_edge_cover(g, s, CoverSpec(ell, true));
        bool in_d = is_edge_cover(d, s, CoverSpec(ell, false));
        CHECK(in_g == in_d);
      }
    }
  }
}

TEST_CASE("handshake and zeta-superset properties") {
  Lcg r{99};
  for (int iter = 0; iter < 40; ++iter) {
    int n = 2 + (int)r.next(5);
    int m = (int)r.next(10);
    MultiGraph g = random_graph(r, n, m, false);
    for (int t = 0; t < 8; ++t) {
      NodeMask s = r.next(1u << n);
      EdgeSet d = delta(g, s), z = zeta(g, s);
      int inside = 0, degsum = 0;
      for (EdgeId e = 0; e < m; ++e) {
        bool a = (s >> g.edge(e).tail) & 1, b = (s >> g.edge(e).head) & 1;
        inside += a && b;
      }
      for (int v = 0; v < n; ++v)
        if ((s >> v) & 1) degsum += g.degree(v);
      CHECK(d.count() + 2 * inside == degsum);
      // zeta >= delta, equality iff s is independent.
      EdgeSet zd = z;
      zd &= d;
      CHECK(zd == d);
      CHECK((z.count() == d.count()) == (inside == 0));
    }
  }
}

TEST_CASE("edge set operations") {
  EdgeSet s(5);
  s.add(1);
  s.add(3);
  CHECK(s.count() == 2);
  CHECK(s.ids() == std::vector<EdgeId>{1, 3});
  CHECK(s.complement().ids() == std::vector<EdgeId>{0, 2, 4});
  CHECK_THROWS_AS(s.add(5), std::out_of_range);
  CHECK(EdgeSet::full(3).count() == 3);
}

TEST_CASE("forest detection") {
  MultiGraph g = triangle();
  EdgeSet two(3);
  two.add(0);
  two.add(1);
  CHECK(is_forest(g, two));
  CHECK_FALSE(is_forest(g, EdgeSet::full(3)));
  // Parallel pair is a 2-cycle.
  MultiGraph p(2, false);
  p.add_edge(0, 1);
  p.add_edge(0, 1);
  CHECK_FALSE(is_forest(p, EdgeSet::full(2)));
  // Directed forests are judged in the double: a directed triangle maps to
  // a perfect matching, which is acyclic.
  MultiGraph c(3, true);
  c.add_edge(0, 1);
  c.add_edge(1, 2);
  c.add_edge(2, 0);
  CHECK(is_forest(c, EdgeSet::full(3)));
}
