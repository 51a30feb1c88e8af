#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lec/generators.hpp"
#include "lec/polytope.hpp"

using namespace lec;

namespace {

MultiGraph cycle(int n) {
  MultiGraph g(n, false);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph complete(int n) {
  MultiGraph g(n, false);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("scale factor cases") {
  // n=3, k=2, ell=1: ell*n odd and x(E)=3 below 3 + 1, so the tight factor.
  ScaleFactor a = theorem1_mu(3, 2, 1, Rat(3));
  CHECK(a.mu_case == MuCase::OddSmall);
  CHECK(a.mu == Rat(2, 3));
  // ell*n even.
  ScaleFactor b = theorem1_mu(4, 3, 2, Rat(6));
  CHECK(b.mu_case == MuCase::EvenOrLarge);
  CHECK(b.mu == Rat(2, 3));
  // ell*n odd but x(E) at the threshold kn/2 + k/(2 ell) = 6.
  ScaleFactor c = theorem1_mu(5, 2, 1, Rat(6));
  CHECK(c.mu_case == MuCase::EvenOrLarge);
  CHECK(c.mu == Rat(1, 2));

  CHECK_THROWS_AS(theorem1_mu(3, 2, 1, Rat(2)), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_mu(3, 2, 0, Rat(4)), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_mu(3, 2, 2, Rat(4)), std::invalid_argument);
}

TEST_CASE("odd-small factor never exceeds the relaxed one") {
  for (int n = 3; n <= 9; n += 2) {
    for (int k = 2; k <= 4; ++k) {
      for (int ell = 1; ell < k; ++ell) {
        if (((long long)ell * n) % 2 == 0) continue;
        // Scan x(E) across the odd-small window [kn/2, kn/2 + k/(2 ell)).
        Rat lo((long long)k * n, 2);
        for (int step = 0; step < 4; ++step) {
          Rat xE = lo + Rat(step, 8) * Rat(k, ell);
          ScaleFactor sf = theorem1_mu(n, k, ell, xE);
          CHECK(sf.mu >= Rat(ell, k));
          CHECK(sf.mu <= Rat(ell, k) + Rat(1, (long long)k * n));
        }
      }
    }
  }
}

TEST_CASE("cover polytope membership examples") {
  MultiGraph tri = cycle(3);
  MembershipVerdict in = in_integral_cover_polytope(tri, FracVector(3, Rat(2, 3)), 1);
  CHECK(in.ok);
  // x(E) = 2 meets the S = V constraint with equality.
  bool found_tight_v = false;
  for (const auto& c : in.tight)
    if (c.s == 0b111 && c.f.count() == 0) found_tight_v = true;
  CHECK(found_tight_v);

  MembershipVerdict out =
      in_integral_cover_polytope(tri, FracVector(3, Rat(1, 2)), 1);
  CHECK_FALSE(out.ok);
  REQUIRE(out.violation.has_value());
  CHECK(out.violation->s == 0b111);
  CHECK(out.violation->lhs == Rat(3, 2));
  CHECK(out.violation->rhs == Rat(2));

  CHECK(in_integral_cover_polytope(cycle(4), FracVector(4, Rat(1, 2)), 1).ok);
  // A degree violation is caught before any S scan.
  MembershipVerdict deg =
      in_integral_cover_polytope(tri, {Rat(1, 4), Rat(1, 4), Rat(1, 4)}, 1);
  CHECK_FALSE(deg.ok);
  CHECK(__builtin_popcountll(deg.violation->s) == 1);
}

TEST_CASE("cover polytope guards") {
  MultiGraph tri = cycle(3);
  CHECK_THROWS_AS(in_integral_cover_polytope(tri, FracVector(3, Rat(2)), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(in_integral_cover_polytope(tri, FracVector(2, Rat(1)), 1),
                  std::invalid_argument);
  MultiGraph d(3, true);
  d.add_edge(0, 1);
  CHECK_THROWS_AS(in_integral_cover_polytope(d, FracVector(1, Rat(1)), 1),
                  std::invalid_argument);
  PolytopeOptions small;
  small.max_nodes = 4;
  CHECK_THROWS_AS(
      in_integral_cover_polytope(cycle(5), FracVector(5, Rat(1)), 1, small),
      too_large_error);
}

TEST_CASE("fast mode agrees with full enumeration") {
  Rng rng(2024);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 3 + (int)rng.below(3);
    MultiGraph g = complete(n);
    FracVector x(g.edge_count());
    for (auto& v : x) v = Rat(rng.below(5), 4);
    for (auto& v : x)
      if (v > Rat(1)) v = Rat(1);
    for (int ell = 1; ell <= 2; ++ell) {
      PolytopeOptions fast, full;
      full.full_enumeration = true;
      MembershipVerdict a = in_integral_cover_polytope(g, x, ell, fast);
      MembershipVerdict b = in_integral_cover_polytope(g, x, ell, full);
      CHECK(a.ok == b.ok);
      CHECK(a.violation.has_value() == b.violation.has_value());
    }
  }
}

TEST_CASE("fractional connectivity verdict") {
  MultiGraph tri = cycle(3);
  FracConVerdict yes = in_frac_con(tri, FracVector(3, Rat(1)), 2);
  CHECK(yes.ok);
  CHECK(yes.min_cut == Rat(2));
  FracConVerdict no = in_frac_con(tri, FracVector(3, Rat(1, 3)), 2);
  CHECK_FALSE(no.ok);
  CHECK(no.min_cut == Rat(2, 3));
  CHECK_THROWS_AS(in_frac_con(tri, FracVector(3, Rat(1)), 0),
                  std::invalid_argument);
}

TEST_CASE("scaled membership on the triangle") {
  MultiGraph tri = cycle(3);
  Theorem1Report rep = verify_theorem1(tri, FracVector(3, Rat(1)), 2, 1);
  CHECK(rep.mu.mu_case == MuCase::OddSmall);
  CHECK(rep.mu.mu == Rat(2, 3));
  CHECK(rep.xE == Rat(3));
  CHECK(rep.primary.ok);
  REQUIRE(rep.relaxed.has_value());
  CHECK(rep.relaxed->ok);
  CHECK(rep.ok());
}

TEST_CASE("scaled membership across generated families") {
  struct Case {
    int k, n;
  };
  for (Case cs : {Case{2, 5}, Case{2, 6}, Case{3, 6}, Case{3, 7}, Case{4, 7},
                  Case{4, 8}}) {
    MultiGraph g = harary(cs.k, cs.n);
    FracVector x(g.edge_count(), Rat(1));
    for (int ell = 1; ell < cs.k; ++ell) {
      Theorem1Report rep = verify_theorem1(g, x, cs.k, ell);
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("hypothesis failure carries the violated cut") {
  MultiGraph tri = cycle(3);
  try {
    verify_theorem1(tri, FracVector(3, Rat(1, 3)), 2, 1);
    FAIL("expected hypothesis_error");
  } catch (const hypothesis_error& e) {
    CHECK(e.value == Rat(2, 3));
    int side_size = __builtin_popcountll(e.side);
    CHECK(side_size >= 1);
    CHECK(side_size <= 2);
  }
}
