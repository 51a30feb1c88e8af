#ifndef LEC_EDGE_COVER_HPP
#define LEC_EDGE_COVER_HPP

#include <vector>

#include "lec/graph.hpp"
#include "lec/matching.hpp"
#include "lec/rational.hpp"

namespace lec {

/// Cover demand: min degree >= ell, or min out- and in-degree >= ell for
/// directed instances. ell = 0 is the trivially satisfied empty demand.
struct CoverSpec {
  int ell;
  bool directed;
  CoverSpec(int l, bool dir) : ell(l), directed(dir) {
    if (l < 0) throw std::invalid_argument("CoverSpec: negative ell");
  }
};

using CostVector = std::vector<Rat>;

inline Rat total_cost(const CostVector& c, const EdgeSet& s) {
  Rat t(0);
  for (EdgeId e : s.ids()) t += c[e];
  return t;
}

bool is_edge_cover(const MultiGraph& g, const EdgeSet& i, const CoverSpec& spec);

/// Minimum cardinality ell-edge-cover: complement of a maximum b-matching
/// with b(v) = deg(v) - ell; directed instances go through the bipartite
/// double. Throws infeasible_error when some degree is below ell.
EdgeSet min_size_edge_cover(const MultiGraph& g, const CoverSpec& spec);

struct CoverResult {
  EdgeSet edges;
  Rat cost;
};

/// Exact minimum-cost ell-edge-cover. Directed: bipartite double + flow.
/// Undirected uniform costs: size solver. Undirected general costs:
/// branch-and-bound over edge decisions, capped at `bb_edge_cap` edges
/// (too_large_error beyond the cap, never silently approximated).
CoverResult min_cost_edge_cover(const MultiGraph& g, const CostVector& c,
                                const CoverSpec& spec, int bb_edge_cap = 24);

enum class BoundCase { EvenOrLarge, OddSmall };

struct CoverBound {
  Rat value;
  BoundCase bound_case;
  /// (ell/k + 1/(kn)) * c(E), always populated.
  Rat relaxed_value;
};

/// Cost bound for an ell-edge-cover of a k-edge-connected graph:
/// (ell/k)c(E) when ell*n is even or |E| >= kn/2 + k/(2 ell), otherwise
/// ((ell n + 1)/(2|E|))c(E). Refuses graphs that are not k-edge-connected.
CoverBound corollary3_bound(const MultiGraph& g, const CostVector& c, int k,
                            int ell);

}  // namespace lec

#endif  // LEC_EDGE_COVER_HPP
