#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lec/edge_cover.hpp"
#include "lec/matching.hpp"

using namespace lec;

namespace {

MultiGraph cycle(int n, bool directed = false) {
  MultiGraph g(n, directed);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph complete(int n) {
  MultiGraph g(n, false);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

struct Lcg {
  std::uint64_t s;
  unsigned next(unsigned bound) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return (unsigned)((s >> 33) % bound);
  }
};

MultiGraph random_graph(Lcg& r, int n, int m) {
  MultiGraph g(n, false);
  for (int i = 0; i < m; ++i) {
    int u = (int)r.next(n), t = (int)r.next(n - 1);
    g.add_edge(u, t + (t >= u ? 1 : 0));
  }
  return g;
}

// Brute-force maximum b-matching size over all edge subsets.
int brute_b_matching(const MultiGraph& g, const DegreeBound& b) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.edge_count()); ++mask) {
    std::vector<int> deg(g.node_count(), 0);
    bool ok = true;
    int size = 0;
    for (EdgeId e = 0; e < g.edge_count() && ok; ++e) {
      if (!((mask >> e) & 1)) continue;
      ++size;
      ok = ++deg[g.edge(e).tail] <= b[g.edge(e).tail] &&
           ++deg[g.edge(e).head] <= b[g.edge(e).head];
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

}  // namespace

TEST_CASE("max flow basics") {
  Capacity unit;
  MultiGraph k4 = complete(4);
  unit.assign(k4.edge_count(), Rat(1));
  CHECK(max_flow(k4, unit, 0, 3).value == Rat(3));

  MultiGraph p(3, false);
  p.add_edge(0, 1);
  p.add_edge(1, 2);
  CHECK(max_flow(p, {Rat(1), Rat(1)}, 0, 2).value == Rat(1));

  MultiGraph par(2, false);
  par.add_edge(0, 1);
  par.add_edge(0, 1);
  CHECK(max_flow(par, {Rat(1), Rat(1)}, 0, 1).value == Rat(2));

  CHECK_THROWS_AS(max_flow(p, {Rat(1), Rat(1)}, 1, 1), std::invalid_argument);
}

TEST_CASE("max flow with rational capacities and directed graphs") {
  MultiGraph g(4, true);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(1, 2);
  Capacity cap = {Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(1), Rat(1, 6)};
  FlowResult f = max_flow(g, cap, 0, 3);
  CHECK(f.value == Rat(1, 2) + Rat(1, 3));
}

TEST_CASE("max matching basics") {
  CHECK(max_matching(cycle(5)).count() == 2);
  CHECK(max_matching(complete(4)).count() == 2);
  CHECK(max_matching(MultiGraph(4, false)).count() == 0);
  // Petersen graph has a perfect matching.
  MultiGraph pet(10, false);
  for (int i = 0; i < 5; ++i) {
    pet.add_edge(i, (i + 1) % 5);
    pet.add_edge(i, i + 5);
    pet.add_edge(i + 5, 5 + (i + 2) % 5);
  }
  CHECK(max_matching(pet).count() == 5);
}

TEST_CASE("matching output is a matching of brute-force size") {
  Lcg r{31};
  for (int iter = 0; iter < 60; ++iter) {
    int n = 2 + (int)r.next(7);
    int m = (int)r.next(11);
    MultiGraph g = random_graph(r, n, m);
    EdgeSet match = max_matching(g);
    std::vector<int> deg(n, 0);
    for (EdgeId e : match.ids()) {
      CHECK(++deg[g.edge(e).tail] <= 1);
      CHECK(++deg[g.edge(e).head] <= 1);
    }
    DegreeBound ones(n, 1);
    CHECK(match.count() == brute_b_matching(g, ones));
  }
}

TEST_CASE("b-matching examples") {
  MultiGraph tri = cycle(3);
  CHECK(max_b_matching(tri, {2, 2, 2}).size == 3);
  CHECK(max_b_matching(tri, {1, 1, 1}).size == 1);
  MultiGraph k4 = complete(4);
  BMatchingResult star = max_b_matching(k4, {3, 1, 1, 1});
  CHECK(star.size == 3);
  for (EdgeId e : star.edges.ids())
    CHECK((k4.edge(e).tail == 0 || k4.edge(e).head == 0));
  // b = 0 forces isolation.
  CHECK(max_b_matching(tri, {0, 2, 2}).size == 1);
}

TEST_CASE("gadget identity against brute force") {
  Lcg r{77};
  for (int iter = 0; iter < 50; ++iter) {
    int n = 2 + (int)r.next(5);
    int m = (int)r.next(10);
    MultiGraph g = random_graph(r, n, m);
    DegreeBound b(n);
    for (int v = 0; v < n; ++v) b[v] = (int)r.next(4);
    BMatchingResult res = max_b_matching(g, b);
    CHECK(res.gadget_matching_size == m + res.size);
    CHECK(res.size == brute_b_matching(g, b));
    std::vector<int> deg(n, 0);
    for (EdgeId e : res.edges.ids()) {
      ++deg[g.edge(e).tail];
      ++deg[g.edge(e).head];
    }
    for (int v = 0; v < n; ++v) CHECK(deg[v] <= b[v]);
  }
}

TEST_CASE("bipartite b-edge-cover examples") {
  // Star K_{1,3}: every leaf forces its edge.
  MultiGraph star(4, false);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  auto r = min_cost_bipartite_b_edge_cover(
      star, {Rat(2), Rat(5), Rat(1)}, {1, 1, 1, 1});
  CHECK(r.edges.count() == 3);
  CHECK(r.cost == Rat(8));

  auto c4 = min_cost_bipartite_b_edge_cover(
      cycle(4), CostVector(4, Rat(1)), {1, 1, 1, 1});
  CHECK(c4.cost == Rat(2));

  MultiGraph c6 = cycle(6);
  auto r6 = min_cost_bipartite_b_edge_cover(
      c6, {Rat(1), Rat(5), Rat(1), Rat(5), Rat(1), Rat(5)}, {1, 1, 1, 1, 1, 1});
  CHECK(r6.cost == Rat(3));
  CHECK(r6.edges.ids() == std::vector<EdgeId>{0, 2, 4});
}

TEST_CASE("bipartite b-edge-cover errors") {
  CHECK_THROWS_AS(min_cost_bipartite_b_edge_cover(cycle(3), CostVector(3, Rat(1)),
                                                  {1, 1, 1}),
                  std::invalid_argument);  // odd cycle
  CHECK_THROWS_AS(min_cost_bipartite_b_edge_cover(cycle(4), CostVector(4, Rat(1)),
                                                  {3, 1, 1, 1}),
                  infeasible_error);
}

TEST_CASE("bipartite b-edge-cover matches brute force") {
  Lcg r{123};
  int done = 0;
  while (done < 40) {
    int left = 1 + (int)r.next(3), right = 1 + (int)r.next(3);
    int n = left + right;
    int m = 1 + (int)r.next(10);
    MultiGraph g(n, false);
    for (int i = 0; i < m; ++i)
      g.add_edge((int)r.next(left), left + (int)r.next(right));
    DegreeBound b(n);
    bool feasible = true;
    for (int v = 0; v < n; ++v) {
      b[v] = (int)r.next(3);
      feasible = feasible && g.degree(v) >= b[v];
    }
    if (!feasible) continue;
    ++done;
    CostVector c(m);
    for (int e = 0; e < m; ++e) c[e] = Rat((long long)r.next(8), 1 + r.next(3));
    auto got = min_cost_bipartite_b_edge_cover(g, c, b);
    // brute force
    bool found = false;
    Rat best(0);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> deg(n, 0);
      Rat cost(0);
      for (EdgeId e = 0; e < m; ++e)
        if ((mask >> e) & 1) {
          ++deg[g.edge(e).tail];
          ++deg[g.edge(e).head];
          cost += c[e];
        }
      bool ok = true;
      for (int v = 0; v < n; ++v) ok = ok && deg[v] >= b[v];
      if (ok && (!found || cost < best)) {
        found = true;
        best = cost;
      }
    }
    REQUIRE(found);
    CHECK(got.cost == best);
    // Output itself satisfies the demands.
    for (int v = 0; v < n; ++v) CHECK(degree_in(g, got.edges, v) >= b[v]);
  }
}
